"""Optional matplotlib renderings of the tabular reports.

Every CLI report stays byte-deterministic on stdout; figures are side files
written only when --figures DIR is passed.  matplotlib is imported lazily so
the exact-arithmetic paths never pay for it.
"""

from __future__ import annotations

import cmath
from pathlib import Path


def _approx(value) -> complex:
    """Numeric approximation of a CyclotomicNumber, for display only."""
    z = cmath.exp(2j * cmath.pi / value.n)
    acc = 0j
    for i, c in enumerate(value.num):
        if c:
            acc += c * z**i
    return acc / value.den


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def schur_figure(rows, outdir) -> Path:
    """Log-scale curves of the two G2 Phi-products per parameter row."""
    plt = _pyplot()
    fig, axes = plt.subplots(1, len(rows), figsize=(4 * len(rows), 3.2))
    qs = list(range(2, 17))
    for ax, row in zip(axes if len(rows) > 1 else [axes], rows):
        lhs = [float(row.lhs.evaluate(q)) for q in qs]
        rhs = [float(row.rhs.evaluate(q)) for q in qs]
        ax.plot(qs, lhs, marker="o", label=row.lhs_factored.phi_string())
        ax.plot(qs, rhs, marker="s", label=row.rhs_factored.phi_string())
        ax.set_yscale("log")
        ax.set_title(f"k = {row.k}")
        ax.set_xlabel("q")
        ax.legend(fontsize=7)
    fig.tight_layout()
    path = Path(outdir) / "schur_g2_table.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def table_figure(table, outdir, stem) -> Path:
    """Heatmap of the real parts of the character values."""
    plt = _pyplot()
    data = [[_approx(v).real for v in row.values] for row in table.rows]
    fig, ax = plt.subplots(figsize=(
        1.0 + 0.45 * len(table.classes), 1.0 + 0.35 * len(table.rows)))
    im = ax.imshow(data, cmap="RdBu_r", aspect="auto")
    ax.set_xlabel("conjugacy class")
    ax.set_ylabel("irreducible")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    path = Path(outdir) / f"{stem}_table.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def separation_figure(W, pairs, bs, degrees, outdir) -> Path:
    """Degree against b-invariant; unseparated pairs highlighted."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    ax.scatter(bs, degrees, s=30, label="Irr(W)")
    flagged = {i for pair in pairs for i in pair}
    if flagged:
        ax.scatter([bs[i] for i in flagged], [degrees[i] for i in flagged],
                   s=80, facecolors="none", edgecolors="red",
                   label="unseparated")
    ax.set_xlabel("b-invariant")
    ax.set_ylabel("degree")
    ax.set_title(W.label)
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(outdir) / f"separation_{W.label.replace('(', '_').rstrip(')')}.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def partition_figure(part, degrees, outdir, stem) -> Path:
    """Series sizes (stacked by constituent degrees)."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(1.2 + 0.5 * len(part.series), 3.2))
    labels = [f"{s.record}:{s.tau_orbit[0]}" for s in part.series]
    sizes = [len(s.members) for s in part.series]
    ax.bar(range(len(sizes)), sizes)
    for i, s in enumerate(part.series):
        ax.text(i, sizes[i] + 0.05,
                ",".join(str(degrees[m]) for m in s.members),
                ha="center", fontsize=6, rotation=90)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_ylabel("series size")
    fig.tight_layout()
    path = Path(outdir) / f"{stem}_series.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
