"""Batch command-line surface.

Deterministic, machine-readable output: TSV (default, '#'-prefixed headers)
or JSON.  Exit codes: 0 success, 1 invariant violation, 2 input error.
All subcommands accept bundled corpus names (e.g. `gl2_3`) or paths to
group/datum JSON files.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from functools import wraps
from pathlib import Path

import click

from . import corpus, perm
from .algebra import GroupOps, skew_corner_report
from .chartab import character_table, inner_product_int
from .clifford import clifford_decomposition, wreath_extension
from .coxeter import b_invariants, coxeter_group, separation_report
from .errors import InputError, InvariantViolation
from .hcseries import (
    disconnected_restriction_check,
    hc_induce,
    hc_partition,
    hc_restrict,
    q_parameter,
)
from .perm import AbelianGroup, parse_abelian
from .schur import G2_KS, g2_table, g2_table_tsv, schur_a1, schur_g2, schur_ratio
from .verify import run_all


def _exit_codes(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InvariantViolation as exc:
            click.echo(f"invariant violation: {exc}", err=True)
            sys.exit(1)
        except InputError as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _emit(data, fmt, tsv_fn):
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True, default=_json_default))
    else:
        click.echo(tsv_fn())


def _json_default(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    return str(obj)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv",
    show_default=True, help="output format",
)
figures_option = click.option(
    "--figures", type=click.Path(file_okay=False), default=None,
    help="directory for rendered figures (created if missing)",
)


@click.group()
@click.option("--max-order", type=int, default=None,
              help="override the group-order enumeration bound")
@click.option("--max-classes", type=int, default=None,
              help="override the conjugacy-class capacity bound")
def main(max_order, max_classes):
    """Exact workbench for finite-group character theory."""
    if max_order is not None:
        perm.ENUMERATION_BOUND = max_order
    if max_classes is not None:
        perm.CLASS_BOUND = max_classes


def _figdir(figures):
    if figures is None:
        return None
    path = Path(figures)
    path.mkdir(parents=True, exist_ok=True)
    return path


# -- table ---------------------------------------------------------------------


@main.command()
@click.option("--group", required=True, help="corpus name or group JSON path")
@format_option
@figures_option
@_exit_codes
def table(group, fmt, figures):
    """Exact character table of a group."""
    gf = corpus.load(group)
    T = character_table(gf.group)
    data = {
        "group": group,
        "order": gf.group.order,
        "conductor": T.conductor,
        "classes": [[perm.perm_order(rep), size] for rep, size in T.classes],
        "rows": [[str(v) for v in row.values] for row in T.rows],
    }
    _emit(data, fmt, T.to_tsv)
    figdir = _figdir(figures)
    if figdir:
        from .figures import table_figure

        out = table_figure(T, figdir, Path(group).stem)
        click.echo(f"# figure: {out}", err=True)


# -- clifford --------------------------------------------------------------------


@main.command()
@click.option("--group", required=True, help="corpus name or group JSON path")
@click.option("--normal", required=True, help="named subgroup to use as N")
@click.option("--char-index", type=int, required=True,
              help="row of Irr(N) to decompose above")
@_exit_codes
def clifford(group, normal, char_index):
    """Clifford decomposition report for (M, N, theta), as JSON."""
    gf = corpus.load(group)
    N = gf.subgroup(normal)
    TN = character_table(N)
    if not 0 <= char_index < len(TN.rows):
        raise InputError(f"char index out of range 0..{len(TN.rows) - 1}")
    rep = clifford_decomposition(gf.group, N, TN.rows[char_index])
    click.echo(json.dumps(rep.to_json(), sort_keys=True))


# -- wreath ---------------------------------------------------------------------


@main.command()
@click.option("--group", required=True, help="corpus name or group JSON path")
@click.option("--char-index", type=int, required=True)
@click.option("-m", "copies", type=int, required=True,
              help="number of tensor factors")
@format_option
@_exit_codes
def wreath(group, char_index, copies, fmt):
    """Canonical tensor-permutation extension to K wr S_m."""
    gf = corpus.load(group)
    K = gf.group
    TK = character_table(K)
    if not 0 <= char_index < len(TK.rows):
        raise InputError(f"char index out of range 0..{len(TK.rows) - 1}")
    W, chi, _val = wreath_extension(K, TK.rows[char_index], copies)
    TW_classes = W.conjugacy_classes()
    data = {
        "wreath_order": W.order,
        "degree": chi.degree().to_int(),
        "irreducible": inner_product_int(chi, chi) == 1,
        "values": [str(v) for v in chi.values],
        "classes": [[perm.perm_order(rep), size] for rep, size in TW_classes],
    }

    def tsv():
        lines = ["#class(order,size)\tvalue"]
        for (rep, size), v in zip(TW_classes, chi.values):
            lines.append(f"({perm.perm_order(rep)},{size})\t{v}")
        return "\n".join(lines)

    _emit(data, fmt, tsv)


# -- hc -------------------------------------------------------------------------


@main.group()
def hc():
    """Harish-Chandra series operations over a BN datum."""


def _load_datum(datum):
    return corpus.load(datum).bn_datum()


@hc.command()
@click.option("--datum", required=True, help="corpus name or datum JSON path")
@format_option
@figures_option
@_exit_codes
def partition(datum, fmt, figures):
    """Partition Irr(G) into Harish-Chandra series."""
    bn = _load_datum(datum)
    part = hc_partition(bn)
    TG = character_table(bn.G)
    degrees = TG.degrees()

    def tsv():
        lines = ["#record\tcuspidal_orbit\tmembers\tmember_degrees\tendo_dim\tweyl_order"]
        for s in part.series:
            lines.append("\t".join([
                s.record,
                ",".join(map(str, s.tau_orbit)),
                ",".join(map(str, s.members)),
                ",".join(str(degrees[m]) for m in s.members),
                str(s.endo_dim),
                str(s.weyl_order),
            ]))
        return "\n".join(lines)

    _emit(part.to_json(), fmt, tsv)
    figdir = _figdir(figures)
    if figdir:
        from .figures import partition_figure

        out = partition_figure(part, degrees, figdir, Path(datum).stem)
        click.echo(f"# figure: {out}", err=True)


@hc.command()
@click.option("--datum", required=True)
@click.option("--record", "record_name", required=True)
@click.option("--char-index", type=int, required=True,
              help="row of Irr(L) to induce")
@format_option
@_exit_codes
def induce(datum, record_name, char_index, fmt):
    """HC induction of an irreducible of a Levi."""
    bn = _load_datum(datum)
    rec = bn.record(record_name)
    TL = character_table(rec.L)
    if not 0 <= char_index < len(TL.rows):
        raise InputError(f"char index out of range 0..{len(TL.rows) - 1}")
    R = hc_induce(bn, record_name, TL.rows[char_index])
    TG = character_table(bn.G)
    cons = TG.constituents(R)
    data = {
        "degree": R.degree().to_int(),
        "values": [str(v) for v in R.values],
        "constituents": cons,
        "endo_dim": inner_product_int(R, R),
    }

    def tsv():
        lines = ["#constituent_row\tmultiplicity\tdegree"]
        for i, m in cons:
            lines.append(f"{i}\t{m}\t{TG.degrees()[i]}")
        return "\n".join(lines)

    _emit(data, fmt, tsv)


@hc.command()
@click.option("--datum", required=True)
@click.option("--record", "record_name", required=True)
@click.option("--char-index", type=int, required=True,
              help="row of Irr(G) to restrict")
@format_option
@_exit_codes
def restrict(datum, record_name, char_index, fmt):
    """HC restriction (U-averaged) of an irreducible of G."""
    bn = _load_datum(datum)
    TG = character_table(bn.G)
    if not 0 <= char_index < len(TG.rows):
        raise InputError(f"char index out of range 0..{len(TG.rows) - 1}")
    res = hc_restrict(bn, record_name, TG.rows[char_index])
    rec = bn.record(record_name)
    TL = character_table(rec.L)
    data = {
        "values": [str(v) for v in res.values],
        "constituents": TL.constituents(res) if not res.is_zero() else [],
        "zero": res.is_zero(),
    }

    def tsv():
        lines = ["#class\tvalue"]
        for k, v in enumerate(res.values):
            lines.append(f"{k}\t{v}")
        return "\n".join(lines)

    _emit(data, fmt, tsv)


@hc.command()
@click.option("--datum", required=True)
@click.option("--record", "record_name", required=True)
@click.option("--char-index", type=int, required=True,
              help="row of Irr(L); q-parameter of its HC induction")
@_exit_codes
def qparam(datum, record_name, char_index):
    """q-parameter of R(tau): ratio of the two constituent degrees."""
    bn = _load_datum(datum)
    rec = bn.record(record_name)
    TL = character_table(rec.L)
    if not 0 <= char_index < len(TL.rows):
        raise InputError(f"char index out of range 0..{len(TL.rows) - 1}")
    R = hc_induce(bn, record_name, TL.rows[char_index])
    qp = q_parameter(R, character_table(bn.G))
    click.echo("undefined" if qp is None else str(qp))


@hc.command("disconnected")
@click.option("--datum", required=True)
@click.option("--record", "record_name", required=True)
@click.option("--char-index", type=int, required=True,
              help="row of Irr(L) used as phi")
@_exit_codes
def hc_disconnected(datum, record_name, char_index):
    """Check both identity-component restriction identities."""
    bn = _load_datum(datum)
    rec = bn.record(record_name)
    TL = character_table(rec.L)
    if not 0 <= char_index < len(TL.rows):
        raise InputError(f"char index out of range 0..{len(TL.rows) - 1}")
    witness = disconnected_restriction_check(bn, record_name, TL.rows[char_index])
    click.echo(json.dumps(witness.to_json(), sort_keys=True))


# -- coxeter-sep ------------------------------------------------------------------


@main.command("coxeter-sep")
@click.option("--type", "type_label", required=True,
              help="Coxeter type: A1..A4, B2, B3, D4, G2, F4, I2(m)")
@figures_option
@_exit_codes
def coxeter_sep(type_label, figures):
    """Pairs of irreducibles not separated by proper parabolic restrictions."""
    W = coxeter_group(type_label)
    pairs = separation_report(W)
    T = character_table(W.group)
    bs = b_invariants(W)
    degrees = T.degrees()
    lines = ["#row_i\trow_j\tdegree\tb_i\tb_j"]
    for i, j in pairs:
        lines.append(f"{i}\t{j}\t{degrees[i]}\t{bs[i]}\t{bs[j]}")
    click.echo("\n".join(lines))
    figdir = _figdir(figures)
    if figdir:
        from .figures import separation_figure

        out = separation_figure(W, pairs, bs, degrees, figdir)
        click.echo(f"# figure: {out}", err=True)


# -- schur -------------------------------------------------------------------------


@main.group()
def schur():
    """Schur elements for the A1 and G2 Hecke parameter families."""


@schur.command("g2-table")
@figures_option
@_exit_codes
def schur_g2_table(figures):
    """The three-row G2 Schur comparison table."""
    click.echo(g2_table_tsv())
    figdir = _figdir(figures)
    if figdir:
        from .figures import schur_figure

        out = schur_figure(g2_table(), figdir)
        click.echo(f"# figure: {out}", err=True)


@schur.command()
@click.option("--type", "family", type=click.Choice(["a1", "g2"]), required=True)
@click.option("--k", type=int, required=True)
@click.option("--q", "q0", type=int, required=True)
@click.option("--b", type=int, default=None,
              help="G2 only: compare phi_{2,b} against phi_{2,3-b}")
@_exit_codes
def ratio(family, k, q0, b):
    """Exact Schur-element ratio at an integer parameter value."""
    if family == "a1":
        c1, ceps = schur_a1(k)
        value = schur_ratio(c1, ceps, q0)
    else:
        b = 1 if b is None else b
        value = schur_ratio(schur_g2(k, 3 - b), schur_g2(k, b), q0)
    click.echo(str(value))


# -- corner ------------------------------------------------------------------------


@main.command()
@click.option("--omega", required=True, help="abelian group, e.g. C3 or C2xC2")
@click.option("--weyl", required=True, help="abelian acting group, e.g. C2")
@click.option("--action", type=click.Choice(["trivial", "invert", "swap"]),
              default="invert", show_default=True)
@click.option("--eta", type=int, required=True,
              help="index of the central idempotent e_eta")
@_exit_codes
def corner(omega, weyl, action, eta):
    """Corner of the skew group algebra at a central idempotent, as JSON."""
    om = GroupOps.from_abelian(parse_abelian(omega))
    wy = GroupOps.from_abelian(parse_abelian(weyl))
    if action == "trivial":
        act = lambda x, w: w
    elif action == "invert":
        act = lambda x, w: om.inv(w) if x != wy.identity else w
    else:
        if len(om.elements[0]) != 2:
            raise InputError("swap action needs Omega = C_n x C_n")
        act = lambda x, w: (w[1], w[0]) if x != wy.identity else w
    report = skew_corner_report(om, wy, act, eta)
    click.echo(json.dumps(report, sort_keys=True))


# -- verify ------------------------------------------------------------------------


@main.command()
@click.option("--only", type=int, multiple=True,
              help="run only the given criterion numbers")
@_exit_codes
def verify(only):
    """Run the full acceptance suite over the bundled corpus."""
    from .verify import ALL_CHECKS

    checks = ALL_CHECKS if not only else [
        c for c in ALL_CHECKS if c[0] in only
    ]
    results = run_all(checks)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        click.echo(f"{status} {r.number:2d} {r.name} ({r.seconds:.2f}s): {r.detail}")
        failed += 0 if r.passed else 1
    click.echo(f"# {len(results) - failed}/{len(results)} criteria passed")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
