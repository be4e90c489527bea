"""Search closed 3-braid words for the fixtures without a tabulated
two-bridge or pretzel form.

Words of length exactly 8 close to diagrams with at most 8 crossings,
so a determinant/Conway match identifies the knot inside the complete
small-knot census once composites are excluded.  The only composite
reachable at this size whose pair collides with a target is the
trefoil+figure-8 sum (det 15, conway 1 - z^4); candidates matching its
Jones product in either chirality are dropped.
"""

from __future__ import annotations

import itertools
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from hopfband.invariants import conway_skein, determinant, jones
from hopfband.laurent import LaurentPoly, parse, render
from gen_fixtures import braid_closure

TARGETS = {
    27: ("8_10", "1 + 3z^2 + 3z^4 + z^6"),
    33: ("8_15", "1 + 4z^2 + 3z^4"),
    35: ("8_16", "1 + z^2 + 2z^4 + z^6"),
    37: ("8_17", "1 - z^2 - 2z^4 - z^6"),
    15: ("8_21", "1 - z^4"),
}


def perm_of(word):
    p = [0, 1, 2]
    for letter in word:
        i = abs(letter) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return p


def is_cycle(p):
    seen, k = set(), 0
    while k not in seen:
        seen.add(k)
        k = p[k]
    return len(seen) == 3


def mirror_q(poly):
    return LaurentPoly("q", {-e: c for e, c in poly.terms})


def main():
    targets = {det: (name, parse(s, "z")) for det, (name, s) in TARGETS.items()}
    tref = braid_closure([1, 1, 1])
    fig8 = braid_closure([1, -2, 1, -2])
    comp = jones(tref) * jones(fig8)
    comp_m = mirror_q(jones(tref)) * jones(fig8)
    found: dict[str, list] = {}
    n_checked = 0
    for word in itertools.product((1, -1, 2, -2), repeat=8):
        if not is_cycle(perm_of(word)):
            continue
        if 1 not in {abs(x) for x in word} or 2 not in {abs(x) for x in word}:
            continue
        n_checked += 1
        d = braid_closure(list(word))
        det = determinant(d)
        hit = targets.get(det)
        if hit is None:
            continue
        name, conway_target = hit
        c = conway_skein(d)
        if c != conway_target:
            continue
        if name == "8_21":
            v = jones(d)
            if v in (comp, comp_m, mirror_q(comp), mirror_q(comp_m)):
                continue
        found.setdefault(name, []).append((list(word), d.writhe, render(jones(d), )))
    print(f"{n_checked} closed 1-component words scanned")
    for name in sorted(found):
        words = found[name]
        print(f"{name}: {len(words)} words")
        # report one representative per distinct jones value
        seen = {}
        for w, wr, v in words:
            seen.setdefault(v, (w, wr))
        for v, (w, wr) in sorted(seen.items()):
            print(f"   {w} writhe {wr:+d}  V = {v}")
    missing = {n for n, _ in TARGETS.values()} - set(found)
    if missing:
        print("NOT FOUND:", sorted(missing))


if __name__ == "__main__":
    sys.exit(main())
