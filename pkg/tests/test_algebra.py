import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from hopfband.laurent import LaurentPoly, render, parse, render_half, parse_half
from hopfband.quadratic import ROOT6, GOLDEN, QuadraticInt
from hopfband.matrices import (
    det_bareiss,
    signature_sym,
    rank_mod,
    corank_mod,
    snf_diagonal,
)


def P(d):
    return LaurentPoly("x", d)


polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=5
).map(P)


class TestLaurentRing:
    @given(polys, polys)
    def test_add_commutes(self, a, b):
        assert a + b == b + a

    @given(polys, polys)
    def test_mul_commutes(self, a, b):
        assert a * b == b * a

    @given(polys, polys, polys)
    def test_mul_assoc(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(polys, polys, polys)
    def test_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys)
    def test_identities(self, a):
        assert a + P({}) == a
        assert a * P({0: 1}) == a
        assert a - a == P({})
        assert a + (-a) == P({})

    @given(polys, st.integers(-4, 4))
    def test_shift_is_monomial_mul(self, a, k):
        assert a.shift(k) == a * P({k: 1})

    @given(polys, polys)
    def test_exact_division_roundtrip(self, a, b):
        if b.is_zero():
            with pytest.raises(ZeroDivisionError):
                (a * b) // b
        else:
            assert (a * b) // b == a

    def test_inexact_division_raises(self):
        with pytest.raises(ValueError):
            P({0: 1, 1: 1}) // P({0: 2})
        with pytest.raises(ValueError):
            P({2: 1}) // P({0: 1, 1: 1})

    def test_var_mismatch(self):
        with pytest.raises(ValueError):
            LaurentPoly("x", {0: 1}) + LaurentPoly("z", {0: 1})

    @given(polys, st.integers(-3, 3))
    def test_eval_int_matches_sum(self, a, x):
        if x == 0 and (a.is_zero() or a.low < 0):
            return
        want = Fraction(0)
        for e, c in a.terms:
            want += Fraction(c) * Fraction(x) ** e
        assert a.eval_at(Fraction(x)) == want

    def test_degree_low_coeff(self):
        a = P({-2: 3, 0: -1, 5: 7})
        assert a.low == -2 and a.degree == 5
        assert a.coeff(-2) == 3 and a.coeff(1) == 0 and a.coeff(5) == 7
        with pytest.raises(ValueError):
            P({}).degree


class TestTextFormat:
    def test_render_examples(self):
        assert render(P({})) == "0"
        assert render(P({0: -1})) == "-1"
        assert render(P({1: 1})) == "x"
        assert render(P({1: -1})) == "-x"
        assert render(P({-1: 2, 0: -1, 1: 2})) == "2x^-1 - 1 + 2x"
        assert render(P({2: -3, 7: 1})) == "-3x^2 + x^7"

    @given(polys)
    def test_roundtrip(self, a):
        assert parse(render(a), "x") == a

    def test_parse_tolerates_spacing(self):
        assert parse("2x^-1-1+2x", "x") == P({-1: 2, 0: -1, 1: 2})
        assert parse(" -x^2 +  3 ", "x") == P({2: -1, 0: 3})
        assert parse("4*x^3", "x") == P({3: 4})

    def test_parse_rejects_junk(self):
        with pytest.raises(ValueError):
            parse("2y + 1", "x")
        with pytest.raises(ValueError):
            parse("x^^2", "x")
        with pytest.raises(ValueError):
            parse("x 2", "x")

    def test_half_exponent_forms(self):
        v = LaurentPoly("q", {1: -1, 5: -1})
        assert render_half(v, "t") == "-t^1/2 - t^5/2"
        assert parse_half("-t^1/2 - t^5/2", "t", "q") == v
        w = LaurentPoly("q", {-4: 1, 0: -2, 2: 3})
        assert render_half(w, "t") == "t^-2 - 2 + 3t"
        assert parse_half("t^-2 - 2 + 3t", "t", "q") == w

    @given(st.dictionaries(st.integers(-8, 8), st.integers(-9, 9), max_size=5))
    def test_half_roundtrip(self, d):
        v = LaurentPoly("q", d)
        assert parse_half(render_half(v, "t"), "t", "q") == v


quad_elems = st.tuples(st.integers(-9, 9), st.integers(-9, 9))


class TestQuadratic:
    def test_root6_basics(self):
        w = ROOT6.root
        assert w * w == w - 1
        assert w ** 6 == ROOT6.one
        assert (2 * w - 1) ** 2 == -3 + 0 * w
        assert w.inv() == 1 - w
        assert w ** -1 == 1 - w
        assert w.conj() == 1 - w

    def test_golden_basics(self):
        g = GOLDEN.root
        assert g * g == 1 - g
        assert (2 * g + 1) ** 2 == 5 + 0 * g
        assert g.inv() == g + 1
        assert g.norm() == -1

    @given(quad_elems, quad_elems)
    def test_norm_multiplicative(self, x, y):
        for ring in (ROOT6, GOLDEN):
            u = ring.element(*x)
            v = ring.element(*y)
            assert (u * v).norm() == u.norm() * v.norm()

    @given(quad_elems, quad_elems)
    def test_conj_is_ring_map(self, x, y):
        for ring in (ROOT6, GOLDEN):
            u = ring.element(*x)
            v = ring.element(*y)
            assert (u + v).conj() == u.conj() + v.conj()
            assert (u * v).conj() == u.conj() * v.conj()

    def test_nonunit_has_no_inverse(self):
        with pytest.raises(ValueError):
            ROOT6.element(2, 0).inv()

    def test_eval_with_negative_exponents(self):
        # q^-2 + q^2 at q = w is w^4 + w^2 = (w^2 - w) + w^2 ... just check vs powers
        p = LaurentPoly("q", {-2: 1, 2: 1})
        w = ROOT6.root
        assert p.eval_at(w) == w ** -2 + w ** 2

    def test_str_forms(self):
        assert str(ROOT6.element(1, -2)) == "1 - 2w"
        assert str(GOLDEN.element(0, 1)) == "g"
        assert str(ROOT6.element(-3, 0)) == "-3"


def naive_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * naive_det(minor)
    return total


int_mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


class TestMatrices:
    @given(int_mats)
    def test_bareiss_matches_cofactor(self, m):
        assert det_bareiss(m) == naive_det(m)

    def test_bareiss_empty_and_singular(self):
        assert det_bareiss([]) == 1
        assert det_bareiss([[0, 0], [0, 0]]) == 0
        assert det_bareiss([[1, 2], [2, 4]]) == 0

    def test_bareiss_over_laurent(self):
        q = LaurentPoly("q", {1: 1})
        one = LaurentPoly.one("q")
        m = [[q, one], [one, q]]
        assert det_bareiss(m, one=one) == q * q - 1
        m2 = [[q, q * q], [one, q]]
        assert det_bareiss(m2, one=one).is_zero()

    def test_signature_examples(self):
        assert signature_sym([]) == 0
        assert signature_sym([[2]]) == 1
        assert signature_sym([[0, 1], [1, 0]]) == 0
        assert signature_sym([[-1, 0], [0, -2]]) == -2
        assert signature_sym([[0, 0], [0, 0]]) == 0
        assert signature_sym([[2, 1], [1, 2]]) == 2

    @given(int_mats)
    def test_signature_congruence_invariant(self, m):
        n = len(m)
        sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
        # shear by a random-ish unimodular move: add row/col 0 into the last
        u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        if n > 1:
            u[n - 1][0] = 3
        prod = [
            [
                sum(u[k][i] * sym[k][l] * u[l][j] for k in range(n) for l in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert signature_sym(prod) == signature_sym(sym)

    def test_rank_mod(self):
        assert rank_mod([[1, 2], [2, 4]], 3) == 1
        assert rank_mod([[3, 0], [0, 3]], 3) == 0
        assert rank_mod([[1, 0], [0, 1]], 3) == 2
        assert corank_mod([[3, 0], [0, 1]], 3) == 1

    def test_snf(self):
        assert snf_diagonal([[2, 0], [0, 3]]) == [1, 6]
        assert snf_diagonal([[2, 4], [6, 8]]) == [2, 4]
        assert snf_diagonal([[0, 0], [0, 0]]) == []
        assert snf_diagonal([[6]]) == [6]

    @given(int_mats)
    def test_snf_consistent_with_det_and_rank3(self, m):
        d = snf_diagonal(m)
        n = len(m)
        det = naive_det(m)
        if len(d) == n:
            prod = 1
            for x in d:
                prod *= x
            assert prod == abs(det)
        else:
            assert det == 0
        assert sum(1 for x in d if x % 3 == 0) + (n - len(d)) == corank_mod(m, 3)
