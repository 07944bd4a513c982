#!/usr/bin/env python3
"""Regenerate the bundled group/datum JSON files in src/hclab/data/.

Matrix groups act on the nonzero row vectors of F_q^n, sorted
lexicographically; a matrix M maps v to v*M.  Run from the repository root:

    python3 tools/make_corpus.py
"""

import json
import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hclab.perm import PermGroup, format_perm, pinv  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "hclab" / "data"


def nonzero_vectors(n, q):
    return sorted(v for v in product(range(q), repeat=n) if any(v))


def mat_to_perm(M, vectors, q):
    index = {v: i for i, v in enumerate(vectors)}
    n = len(M)
    images = []
    for v in vectors:
        w = tuple(sum(v[i] * M[i][j] for i in range(n)) % q for j in range(n))
        images.append(index[w])
    return tuple(images)


def perm_strings(perms):
    return [format_perm(p) for p in perms]


def group_json(degree, gens, subgroups=None, **extra):
    out = {"degree": degree, "generators": perm_strings(gens)}
    if subgroups:
        out["subgroups"] = {k: perm_strings(v) for k, v in subgroups.items()}
    out.update(extra)
    return out


def write(name, obj):
    path = DATA / f"{name}.json"
    path.write_text(json.dumps(obj, indent=1) + "\n")
    print("wrote", path)


def parse_cycles(*strings, degree):
    from hclab.perm import parse_perm

    return [parse_perm(s, degree) for s in strings]


def main():
    DATA.mkdir(exist_ok=True)

    # -- plain permutation groups ------------------------------------------
    s3 = parse_cycles("(1 2)", "(1 2 3)", degree=3)
    write("s3", group_json(3, s3, {"C3": parse_cycles("(1 2 3)", degree=3)}))

    s4 = parse_cycles("(1 2)", "(1 2 3 4)", degree=4)
    write("s4", group_json(4, s4, {
        "V4": parse_cycles("(1 2)(3 4)", "(1 3)(2 4)", degree=4),
        "A4": parse_cycles("(1 2 3)", "(2 3 4)", degree=4),
    }))

    s5 = parse_cycles("(1 2)", "(1 2 3 4 5)", degree=5)
    write("s5", group_json(5, s5))

    a4 = parse_cycles("(1 2 3)", "(2 3 4)", degree=4)
    write("a4", group_json(4, a4, {
        "V4": parse_cycles("(1 2)(3 4)", "(1 3)(2 4)", degree=4),
    }))

    d8 = parse_cycles("(1 2 3 4)", "(1 3)", degree=4)
    write("d8", group_json(4, d8, {"Z": parse_cycles("(1 3)(2 4)", degree=4)}))

    c6 = parse_cycles("(1 2 3 4 5 6)", degree=6)
    write("c6", group_json(6, c6))

    # Q8 in its regular action: elements 1,-1,i,-i,j,-j,k,-k (indices 0..7)
    # right multiplication by i and j
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {s: t for t, s in enumerate(names)}
    mul = {}
    sign = lambda s: ("-" + s if not s.startswith("-") else s[1:])
    base = {("1", x): x for x in "1 i j k".split()}
    rules = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
        ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k", ("1", "1"): "1",
    }
    def qmul(a, b):
        s = 1
        if a.startswith("-"):
            s, a = -s, a[1:]
        if b.startswith("-"):
            s, b = -s, b[1:]
        c = rules[(a, b)] if (a, b) in rules else base[(a, b)]
        if c.startswith("-"):
            s, c = -s, c[1:]
        return c if s > 0 else "-" + c
    def right_mult(x):
        return tuple(idx[qmul(names[t], x)] for t in range(8))
    q8_gens = [right_mult("i"), right_mult("j")]
    write("q8", group_json(8, q8_gens, {"Z": [right_mult("-1")]}))

    # S3 wr C2 on 6 points; base subgroup S3 x S3 is a generator sublist
    wr_gens = parse_cycles("(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)",
                           "(1 4)(2 5)(3 6)", degree=6)
    write("s3_wr_c2", group_json(6, wr_gens, {"S3xS3": wr_gens[:4]}))

    # -- GL2(3) with BN datum and disconnected structure ---------------------
    q = 3
    vecs = nonzero_vectors(2, q)
    deg = len(vecs)
    m = lambda M: mat_to_perm(M, vecs, q)
    S = m([[0, 2], [1, 0]])       # [[0,-1],[1,0]]
    T = m([[1, 1], [0, 1]])
    D1 = m([[2, 0], [0, 1]])
    D2 = m([[1, 0], [0, 2]])
    W = m([[0, 1], [1, 0]])
    mI = m([[2, 0], [0, 2]])
    gl23 = {
        "degree": deg,
        "generators": perm_strings([S, T, D1]),
        "subgroups": {
            "SL2": perm_strings([S, T]),
            "Z": perm_strings([mI]),
        },
        "identity_component": perm_strings([S, T]),
        "parabolics": [
            {"name": "B", "P": perm_strings([D1, D2, T]),
             "L": perm_strings([D1, D2]), "U": perm_strings([T]),
             "weyl": perm_strings([D1, D2, W])},
            {"name": "Bo", "P": perm_strings([mI, T]),
             "L": perm_strings([mI]), "U": perm_strings([T]),
             "weyl": perm_strings([S]), "partition": False},
        ],
    }
    G = PermGroup(deg, [S, T, D1])
    assert G.order == 48, G.order
    assert PermGroup(deg, [S, T]).order == 24
    assert PermGroup(deg, [D1, D2, T]).order == 12
    assert PermGroup(deg, [D1, D2, W]).order == 8
    write("gl2_3", gl23)

    # SL2(3) extended by C2 acting through conjugation by diag(1,-1):
    # the semidirect construction exercised by perm-core
    conj = lambda g, h: mat_to_perm(h, vecs, q)  # placeholder, not used
    d = [[1, 0], [0, 2]]
    dinv = [[1, 0], [0, 2]]  # d has order 2
    def mconj(M):
        # d^-1 M d over F_3
        A = [[sum(dinv[i][k] * M[k][j] for k in range(2)) % q for j in range(2)]
             for i in range(2)]
        return [[sum(A[i][k] * d[k][j] for k in range(2)) % q for j in range(2)]
                for i in range(2)]
    sl23 = {
        "semidirect": {
            "normal": {"degree": deg, "generators": perm_strings([S, T])},
            "acting": {"orders": [2]},
            "action": [perm_strings([m(mconj([[0, 2], [1, 0]])),
                                     m(mconj([[1, 1], [0, 1]]))])],
        }
    }
    write("sl2_3_c2", sl23)

    # -- GL2(5) with BN datum ------------------------------------------------
    q = 5
    vecs = nonzero_vectors(2, q)
    deg = len(vecs)
    m = lambda M: mat_to_perm(M, vecs, q)
    S = m([[0, 4], [1, 0]])
    T = m([[1, 1], [0, 1]])
    D1 = m([[2, 0], [0, 1]])
    D2 = m([[1, 0], [0, 2]])
    W = m([[0, 1], [1, 0]])
    gl25 = {
        "degree": deg,
        "generators": perm_strings([S, T, D1]),
        "subgroups": {"SL2": perm_strings([S, T])},
        "parabolics": [
            {"name": "B", "P": perm_strings([D1, D2, T]),
             "L": perm_strings([D1, D2]), "U": perm_strings([T]),
             "weyl": perm_strings([D1, D2, W])},
        ],
    }
    G = PermGroup(deg, [S, T, D1])
    assert G.order == 480, G.order
    assert PermGroup(deg, [D1, D2, T]).order == 80
    assert PermGroup(deg, [D1, D2]).order == 16
    write("gl2_5", gl25)

    # -- GL3(2) with BN datum ------------------------------------------------
    q = 2
    vecs = nonzero_vectors(3, q)
    deg = len(vecs)
    m = lambda M: mat_to_perm(M, vecs, q)
    E12 = m([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    E13 = m([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    E23 = m([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    P12 = m([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    P23 = m([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    C3 = m([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    gl32 = {
        "degree": deg,
        "generators": perm_strings([E12, C3]),
        "parabolics": [
            {"name": "B", "P": perm_strings([E12, E13, E23]),
             "L": [], "U": perm_strings([E12, E13, E23]),
             "weyl": perm_strings([P12, P23])},
            {"name": "P21", "P": perm_strings([P12, E12, E13, E23]),
             "L": perm_strings([P12, E12]), "U": perm_strings([E13, E23])},
        ],
    }
    G = PermGroup(deg, [E12, C3])
    assert G.order == 168, G.order
    assert PermGroup(deg, [E12, E13, E23]).order == 8
    assert PermGroup(deg, [P12, E12, E13, E23]).order == 24
    assert PermGroup(deg, [P12, E12]).order == 6
    assert PermGroup(deg, [P12, P23]).order == 6
    write("gl3_2", gl32)


if __name__ == "__main__":
    main()
