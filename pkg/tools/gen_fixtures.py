"""Generate the named diagram fixtures and their invariant table.

Every diagram is built from an exactly-identified presentation (braid
word, 2-bridge fraction, or pretzel tangle vector) and then gated on
independently computed invariants before being written out:

  * checkerboard determinant must match the presentation's own number
    (continued-fraction numerator, pretzel formula),
  * exchange-relation Conway polynomial must match the recorded target,
  * |V(i)| must reproduce the determinant a third way.

A fixture that fails any gate aborts generation.  Run from the repo
root:  python3 tools/gen_fixtures.py [--out data/]
"""

from __future__ import annotations

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fractions import Fraction

from hopfband.invariants import conway_skein, determinant, jones
from hopfband.laurent import LaurentPoly, parse, render
from hopfband.pdcodes import Diagram, _merge_edges


# ---- constructors ----

def braid_emit(word, strands):
    """Crossing tuples for a braid word, strands flowing downward.

    word entries are +-(i+1) for the standard generator on strand pair
    (i, i+1); returns (crossings, starts, currents).
    """
    cur = list(range(1, strands + 1))
    start = cur[:]
    nxt = strands
    crossings = []
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        n1, n2 = nxt + 1, nxt + 2
        nxt += 2
        if letter > 0:
            crossings.append((cur[i], n1, n2, cur[i + 1]))
        else:
            crossings.append((cur[i + 1], cur[i], n1, n2))
        cur[i], cur[i + 1] = n1, n2
    return crossings, start, cur


def braid_closure(word, strands=None):
    if strands is None:
        strands = max(abs(x) for x in word) + 1
    crossings, start, cur = braid_emit(word, strands)
    pairs = [(start[i], cur[i]) for i in range(strands)]
    merged, loops = _merge_edges(crossings, pairs)
    return Diagram(merged, loops, repair=True)


def plat4(word):
    """Plat closure of a 4-strand braid: caps joining strands (1,2) and
    (3,4) at both ends."""
    crossings, start, cur = braid_emit(word, 4)
    pairs = [(start[0], start[1]), (start[2], start[3]),
             (cur[0], cur[1]), (cur[2], cur[3])]
    merged, loops = _merge_edges(crossings, pairs)
    return Diagram(merged, loops, repair=True)


def cf_value(cf):
    v = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        v = a + 1 / v
    return v


def rational_link(cf):
    """4-plat of the odd-length positive continued fraction, alternating
    middle twists and lower twists."""
    cf = list(cf)
    if len(cf) % 2 == 0:
        # [..., a] and [..., a-1, 1] name the same fraction; keep length odd
        cf[-1:] = [cf[-1] - 1, 1]
    word = []
    for k, a in enumerate(cf):
        word += ([2] * a) if k % 2 == 0 else ([-1] * a)
    return plat4(word)


def pretzel(*ts):
    """Vertical twist regions joined cyclically, t_k signed crossings in
    region k."""
    crossings = []
    tops, bots = [], []
    nxt = 0
    for t in ts:
        a, b = nxt + 1, nxt + 2
        nxt += 2
        cur = [a, b]
        tops.append((a, b))
        for _ in range(abs(t)):
            n1, n2 = nxt + 1, nxt + 2
            nxt += 2
            if t > 0:
                crossings.append((cur[0], n1, n2, cur[1]))
            else:
                crossings.append((cur[1], cur[0], n1, n2))
            cur = [n1, n2]
        bots.append((cur[0], cur[1]))
    m = len(ts)
    pairs = []
    for k in range(m):
        pairs.append((tops[k][1], tops[(k + 1) % m][0]))
        pairs.append((bots[k][1], bots[(k + 1) % m][0]))
    merged, loops = _merge_edges(crossings, pairs)
    return Diagram(merged, loops, repair=True)


# ---- recorded identifications and targets ----

# name -> (kind, data, conway target, determinant, unknotting, slice genus)
# conway targets are in z; determinant triple-checks the construction.
KNOTS = {
    "3_1":  ("braid", [1, 1, 1],              "1 + z^2",                 3, 1, 1),
    "4_1":  ("cf", [2, 2],                    "1 - z^2",                 5, 1, 1),
    "5_1":  ("braid", [1] * 5,                "1 + 3z^2 + z^4",          5, 2, 2),
    "5_2":  ("cf", [3, 2],                    "1 + 2z^2",                7, 1, 1),
    "6_1":  ("cf", [4, 2],                    "1 - 2z^2",                9, 1, 0),
    "6_2":  ("cf", [3, 1, 2],                 "1 - z^2 - z^4",           11, 1, 1),
    "6_3":  ("cf", [2, 1, 1, 2],              "1 + z^2 + z^4",           13, 1, 1),
    "7_1":  ("braid", [1] * 7,                "1 + 6z^2 + 5z^4 + z^6",   7, 3, 3),
    "7_2":  ("cf", [5, 2],                    "1 + 3z^2",                11, 1, 1),
    "7_3":  ("cf", [3, 4],                    "1 + 5z^2 + 2z^4",         13, 2, 2),
    "7_4":  ("cf", [3, 1, 3],                 "1 + 4z^2",                15, 2, 1),
    "7_5":  ("cf", [2, 2, 3],                 "1 + 4z^2 + 2z^4",         17, 2, 2),
    "7_6":  ("cf", [2, 1, 2, 2],              "1 + z^2 - z^4",           19, 1, 1),
    "7_7":  ("cf", [2, 1, 1, 1, 2],           "1 - z^2 + z^4",           21, 1, 1),
    "8_1":  ("cf", [6, 2],                    "1 - 3z^2",                13, 1, 1),
    "8_2":  ("cf", [5, 1, 2],                 "1 - 3z^4 - z^6",          17, 2, 2),
    "8_3":  ("cf", [4, 4],                    "1 - 4z^2",                17, 2, 1),
    "8_4":  ("cf", [4, 1, 3],                 "1 - 3z^2 - 2z^4",         19, 2, 1),
    "8_5":  ("pretzel", (3, 3, 2),            "1 - z^2 - 3z^4 - z^6",    21, 2, 2),
    "8_6":  ("cf", [3, 3, 2],                 "1 - 2z^2 - 2z^4",         23, 2, 1),
    "8_7":  ("cf", [2, 1, 1, 4],              "1 + 2z^2 + 3z^4 + z^6",   23, 1, 1),
    "8_8":  ("cf", [2, 1, 3, 2],              "1 + 2z^2 + 2z^4",         25, 2, 1),
    "8_9":  ("cf", [3, 1, 1, 3],              "1 - 2z^2 - 3z^4 - z^6",   25, 1, 1),
    "8_10": ("braid", None,                   "1 + 3z^2 + 3z^4 + z^6",   27, 2, 1),
    "8_11": ("cf", [3, 2, 1, 2],              "1 - z^2 - 2z^4",          27, 1, 1),
    "8_12": ("cf", [2, 2, 2, 2],              "1 - 3z^2 + z^4",          29, 2, 1),
    "8_13": ("cf", [2, 1, 1, 1, 3],           "1 + z^2 + 2z^4",          29, 1, 1),
    "8_14": ("cf", [2, 1, 1, 2, 2],           "1 - 2z^4",                31, 1, 1),
    "8_15": ("braid", None,                   "1 + 4z^2 + 3z^4",         33, 2, 2),
    "8_16": ("braid", None,                   "1 + z^2 + 2z^4 + z^6",    35, 2, 1),
    "8_17": ("braid", None,                   "1 - z^2 - 2z^4 - z^6",    37, 1, 1),
    "8_18": ("braid", [1, -2, 1, -2, 1, -2, 1, -2],
                                              "1 + z^2 - z^4 - z^6",     45, 2, 1),
    "8_19": ("pretzel", (3, 3, -2),           "1 + 5z^2 + 5z^4 + z^6",   3, 3, 3),
    "8_20": ("pretzel", (3, -3, 2),           "1 + 2z^2 + z^4",          9, 1, 0),
    "8_21": ("braid", None,                   "1 - z^4",                 15, 1, 1),
}


def build(name):
    kind, data = KNOTS[name][0], KNOTS[name][1]
    if data is None:
        raise ValueError(f"{name}: braid word not pinned yet")
    if kind == "braid":
        return braid_closure(data)
    if kind == "cf":
        return rational_link(data)
    if kind == "pretzel":
        return pretzel(*data)
    raise ValueError(kind)


def det_via_jones(d):
    re = im = 0
    for e, coef in jones(d).terms:
        k = e % 4
        if k == 0:
            re += coef
        elif k == 1:
            im += coef
        elif k == 2:
            re -= coef
        else:
            im -= coef
    assert re == 0 or im == 0
    return abs(re) + abs(im)


def check(name, d):
    kind, data, conway_s, det, _, _ = KNOTS[name]
    problems = []
    if kind == "cf":
        frac = cf_value(data)
        if frac.numerator != det:
            problems.append(f"fraction {frac} numerator != det {det}")
    if kind == "pretzel":
        p, q, r = data
        if abs(p * q + q * r + r * p) != det:
            problems.append("pretzel determinant formula mismatch")
    dd = determinant(d)
    if dd != det:
        problems.append(f"checkerboard det {dd} != {det}")
    dj = det_via_jones(d)
    if dj != det:
        problems.append(f"|V(i)| {dj} != {det}")
    c = conway_skein(d)
    if c != parse(conway_s, "z"):
        problems.append(f"conway {render(c)} != {conway_s}")
    if len(d.components) != 1 or d.loops:
        problems.append("not a one-component diagram")
    return problems


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent
                                         / "src" / "hopfband" / "data"))
    ap.add_argument("--only", nargs="*", help="subset of names")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    names = args.only or list(KNOTS)
    rows = [("0_1", Diagram([], 1))]
    bad = 0
    for name in names:
        try:
            d = build(name)
        except ValueError as ex:
            print(f"SKIP {name}: {ex}")
            bad += 1
            continue
        problems = check(name, d)
        if problems:
            bad += 1
            print(f"FAIL {name}: " + "; ".join(problems))
            continue
        print(f"ok   {name}: n={d.n} writhe={d.writhe:+d}")
        rows.append((name, d))
    if bad:
        print(f"{bad} fixture(s) not generated")
        return 1
    if not args.only:
        with open(out / "knots.pd", "w") as fh:
            fh.write("# name<TAB>diagram, one per line\n")
            for name, d in rows:
                fh.write(f"{name}\t{d.to_pd()}\n")
        with open(out / "invariants.csv", "w") as fh:
            fh.write("name,unknotting,slice_genus\n")
            for name, _ in rows:
                if name == "0_1":
                    fh.write("0_1,0,0\n")
                else:
                    u, g4 = KNOTS[name][4], KNOTS[name][5]
                    fh.write(f"{name},{u},{g4}\n")
        print(f"wrote {len(rows)} fixtures to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
