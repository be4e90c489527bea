"""Exact link invariants computed from planar diagram codes.

Everything here is arithmetic over Z: Laurent polynomials for the
bracket, Jones, Conway and absolute polynomials, plain integers for the
pairing-form data.  The three polynomial engines are independent
recursions, which later consistency checks play off against the surface
route; keep them that way.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .matrices import det_bareiss, rank_mod
from .pdcodes import Diagram, InvalidDiagram


class MemoCache:
    """Dict keyed by canonical diagram form, with hit counters so the
    benchmark can report how much the canonical relabeling buys."""

    __slots__ = ("store", "hits", "misses")

    def __init__(self):
        self.store: dict = {}
        self.hits = 0
        self.misses = 0

    def lookup(self, key):
        v = self.store.get(key)
        if v is None:
            self.misses += 1
        else:
            self.hits += 1
        return v

    def put(self, key, value):
        self.store[key] = value
        return value

    def clear(self):
        self.store.clear()
        self.hits = self.misses = 0


_bracket_cache = MemoCache()
_conway_cache = MemoCache()
_q_cache = MemoCache()


def clear_caches():
    for c in (_bracket_cache, _conway_cache, _q_cache):
        c.clear()


def _mono(var: str, exp: int, coef: int = 1) -> LaurentPoly:
    return LaurentPoly.gen(var, exp, coef)


# ---- Kauffman bracket and Jones ----

_DELTA = LaurentPoly("A", {2: -1, -2: -1})


def _delta_pow(k: int) -> LaurentPoly:
    out = LaurentPoly.one("A")
    for _ in range(k):
        out = out * _DELTA
    return out


def _total_components(d: Diagram) -> int:
    return len(d.components) + d.loops


def bracket(d: Diagram) -> LaurentPoly:
    """Kauffman state sum in A, normalized to 1 on a single loop.

    A crossingless diagram with k loops evaluates to (-A^2-A^-2)^(k-1);
    the empty diagram is treated like a single loop.
    """
    if d.n == 0:
        return _delta_pow(max(d.loops, 1) - 1)
    return _bracket_rec(d)


def _bracket_rec(d: Diagram) -> LaurentPoly:
    d, sp, sm = d._reduce()
    # each removed positive kink contributed -A^3, each negative -A^-3
    fac = _mono("A", 3 * (sp - sm), -1 if (sp + sm) % 2 else 1)
    if d.n == 0:
        return fac * _delta_pow(d.loops - 1)
    key = d.canonical_key()
    val = _bracket_cache.lookup(key)
    if val is None:
        a = _bracket_rec(d.smooth_a(0))
        b = _bracket_rec(d.smooth_b(0))
        val = _bracket_cache.put(key, _mono("A", 1) * a + _mono("A", -1) * b)
    return fac * val


def jones(d: Diagram) -> LaurentPoly:
    """Jones polynomial in q where q^2 = t, so links whose value needs
    half-integer powers of t still live over integer exponents.  Render
    with laurent.render_half(..., "t") for the classical form."""
    w = d.writhe
    f = _mono("A", -3 * w, -1 if w % 2 else 1) * bracket(d)
    terms = {}
    for e, c in f.terms:
        if e % 2:
            raise AssertionError("normalized bracket kept an odd exponent")
        terms[-e // 2] = c
    return LaurentPoly("q", terms)


# ---- Conway polynomial, exchange-relation route ----


def conway_skein(d: Diagram) -> LaurentPoly:
    """Conway polynomial in z by crossing exchanges down to descending
    diagrams.  This route uses no surface data at all; the Seifert-form
    route must agree with it and the two are checked against each other.
    """
    one = LaurentPoly.one("z")
    zero = LaurentPoly.zero("z")
    z = _mono("z", 1)

    def rec(d: Diagram) -> LaurentPoly:
        d, _, _ = d._reduce()
        if d.n == 0:
            return one if d.loops == 1 else zero
        if d.loops or d.is_split():
            return zero
        key = d.canonical_key()
        val = _conway_cache.lookup(key)
        if val is not None:
            return val
        c = d.first_ascent()
        if c is None:
            val = one if len(d.components) == 1 else zero
        else:
            val = rec(d.switch(c)) + z * rec(d.smooth_oriented(c)) * d.signs[c]
        return _conway_cache.put(key, val)

    return rec(d)


# ---- absolute polynomial (unoriented exchange relation) ----


def q_poly(d: Diagram) -> LaurentPoly:
    """Unoriented exchange-relation polynomial in x: switching and both
    smoothings of any crossing are related by
    Q(D) + Q(switch) = x (Q(smooth_a) + Q(smooth_b)),
    with (2x^-1 - 1)^(k-1) on crossingless k-component diagrams."""
    x = _mono("x", 1)
    free = LaurentPoly("x", {-1: 2, 0: -1})

    def unlink(k: int) -> LaurentPoly:
        out = LaurentPoly.one("x")
        for _ in range(k - 1):
            out = out * free
        return out

    def rec(d: Diagram) -> LaurentPoly:
        d, _, _ = d._reduce()
        if d.n == 0:
            return unlink(max(d.loops, 1))
        key = d.canonical_key()
        val = _q_cache.lookup(key)
        if val is not None:
            return val
        c = d.first_ascent()
        if c is None:
            val = unlink(_total_components(d))
        else:
            val = x * (rec(d.smooth_a(c)) + rec(d.smooth_b(c))) - rec(d.switch(c))
        return _q_cache.put(key, val)

    return rec(d)


# ---- checkerboard pairing form ----


def goeritz_matrix(d: Diagram, shade: int = 0) -> list[list[int]]:
    """Integer pairing matrix of the faces in one checkerboard class,
    with the first such face's row and column deleted.

    shade picks which of the two classes is kept (0 or 1); both choices
    present the same double-cover homology, so the derived numbers agree.
    """
    if d.n == 0:
        return []
    colors = d.checkerboard()
    faces, _ = d.face_data
    corner_face: dict[tuple[int, int], int] = {}
    for fi, face in enumerate(faces):
        for _, ci, p in face:
            corner_face[(ci, p)] = fi
    kept = [i for i, c in enumerate(colors) if c == shade]
    index = {f: k for k, f in enumerate(kept)}
    m = len(kept)
    g = [[0] * m for _ in range(m)]
    for ci in range(d.n):
        # the two corners of the kept class sit on one diagonal; the
        # crossing type is read off from which diagonal that is
        if colors[corner_face[(ci, 1)]] == shade:
            eta, pair = 1, (corner_face[(ci, 1)], corner_face[(ci, 3)])
        else:
            eta, pair = -1, (corner_face[(ci, 0)], corner_face[(ci, 2)])
        u, v = index[pair[0]], index[pair[1]]
        if u != v:
            g[u][v] -= eta
            g[v][u] -= eta
            g[u][u] += eta
            g[v][v] += eta
    return [row[1:] for row in g[1:]]


def determinant(d: Diagram) -> int:
    """Order of the pairing form: |det| of the reduced checkerboard
    matrix.  1 for an unknotted loop, 0 for split diagrams."""
    if d.n == 0:
        return 1 if d.loops == 1 else 0
    if d.loops or d.is_split():
        return 0
    return abs(det_bareiss(goeritz_matrix(d)))


def branched_d(d: Diagram) -> int:
    """Minimal generator count of the pairing cokernel mod 3 (the mod-3
    corank of the reduced checkerboard matrix)."""
    if d.n == 0:
        if d.loops == 1:
            return 0
        raise InvalidDiagram("needs a connected diagram")
    g = goeritz_matrix(d)
    return len(g) - rank_mod(g, 3)
