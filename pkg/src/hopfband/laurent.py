"""Exact Laurent polynomials in one variable over the integers.

Every invariant this package computes lives in a ring of the form
Z[v, v^-1] for a single formal variable v, so this module keeps the
representation deliberately small: an immutable sorted tuple of
(exponent, coefficient) pairs plus a one-letter variable tag.  The tag
is part of the value; adding a polynomial in A to one in z is a bug and
raises immediately.

The textual format used everywhere (repr, CLI output, data files) lists
terms in ascending exponent order, e.g. ``2x^-1 - 1 + 2x``.  A second
pair of helpers, render_half / parse_half, handles the classical
half-integer exponent notation for polynomials that are stored
internally in the square root of the display variable (exponent k of
the stored variable prints as ``t^k/2``).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("var", "terms")

    def __init__(self, var: str, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if not (isinstance(var, str) and len(var) == 1 and var.isalpha()):
            raise ValueError(f"variable must be a single letter, got {var!r}")
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "var", var)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        )

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls, var: str) -> "LaurentPoly":
        return cls(var)

    @classmethod
    def one(cls, var: str) -> "LaurentPoly":
        return cls(var, {0: 1})

    @classmethod
    def const(cls, var: str, c: int) -> "LaurentPoly":
        return cls(var, {0: c})

    @classmethod
    def gen(cls, var: str, exp: int = 1, coef: int = 1) -> "LaurentPoly":
        """The monomial coef * var**exp."""
        return cls(var, {exp: coef})

    # ---- inspection ----

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    @property
    def low(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return self.terms[0][0]

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    # ---- ring structure ----

    def _check(self, other: "LaurentPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.var, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(self.var, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(self.var, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var**k."""
        return LaurentPoly(self.var, [(e + k, c) for e, c in self.terms])

    def __floordiv__(self, other):
        """Exact division; raises if the quotient is not a Laurent polynomial.

        Used by the fraction-free determinant routine, which only ever
        divides by a previous pivot that is guaranteed to divide exactly.
        """
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        # shift both to ordinary polynomials and long-divide
        num = dict(self.shift(-self.low).terms)
        dlow = other.low
        den = other.shift(-dlow).terms
        dd = den[-1][0]
        dlead = den[-1][1]
        qterms: dict[int, int] = {}
        ndeg = max(num) if num else 0
        while num:
            ndeg = max(e for e, c in num.items() if c != 0)
            lead = num[ndeg]
            if ndeg < dd or lead % dlead != 0:
                raise ValueError("inexact Laurent division")
            qc = lead // dlead
            qe = ndeg - dd
            qterms[qe] = qterms.get(qe, 0) + qc
            for e, c in den:
                num[e + qe] = num.get(e + qe, 0) - qc * c
            num = {e: c for e, c in num.items() if c != 0}
        return LaurentPoly(self.var, qterms).shift(self.low - dlow)

    # ---- comparison ----

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.var, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        return hash((self.var, self.terms))

    def __bool__(self):
        return bool(self.terms)

    # ---- evaluation ----

    def eval_at(self, elem):
        """Evaluate at elem, which must support **, * and + (e.g. QuadraticInt).

        Negative exponents are delegated to elem ** k, so elem has to be
        a unit of its ring for those to work.
        """
        one = elem ** 0
        if not self.terms:
            return 0 * one
        acc = None
        prev = None
        for e, c in reversed(self.terms):
            if acc is None:
                acc = c * one
            else:
                acc = acc * (elem ** (prev - e)) + c * one
            prev = e
        return acc * (elem ** self.terms[0][0])

    def __repr__(self):
        return f"LaurentPoly({self.var!r}, {render(self)!r})"

    def __str__(self):
        return render(self)


# ---- text format ----

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<num>\d+)\s*\*?\s*(?:(?P<var1>[A-Za-z])(?:\^(?P<exp1>-?\d+(?:/2)?))?)?
          | (?P<var2>[A-Za-z])(?:\^(?P<exp2>-?\d+(?:/2)?))?
        )\s*""",
    re.VERBOSE,
)


def render(poly: LaurentPoly) -> str:
    """Ascending-exponent text form, e.g. ``2x^-1 - 1 + 2x``."""
    if not poly.terms:
        return "0"
    parts: list[str] = []
    for i, (e, c) in enumerate(poly.terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            v = poly.var if e == 1 else f"{poly.var}^{e}"
            body = v if mag == 1 else f"{mag}{v}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def render_half(poly: LaurentPoly, outer: str) -> str:
    """Print a polynomial stored in sqrt(outer) using half-integer exponents.

    Exponent 2k of the stored variable becomes outer^k, exponent 2k+1
    becomes outer^(2k+1)/2.  Example: a polynomial in q with q = t^(1/2)
    renders as ``-t^1/2 - t^5/2``.
    """
    if not poly.terms:
        return "0"
    parts: list[str] = []
    for i, (e, c) in enumerate(poly.terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            if e % 2 == 0:
                k = e // 2
                v = outer if k == 1 else f"{outer}^{k}"
            else:
                v = f"{outer}^{e}/2"
            body = v if mag == 1 else f"{mag}{v}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def _parse_terms(text: str, var: str, half: bool) -> LaurentPoly:
    s = text.strip()
    if s in ("0", "+0", "-0"):
        return LaurentPoly.zero(var)
    acc: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:pos + 12]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- before {s[pos:pos + 12]!r}")
        sgn = -1 if sign == "-" else 1
        num = m.group("num")
        v = m.group("var1") or m.group("var2")
        exp_s = m.group("exp1") or m.group("exp2")
        coef = sgn * (int(num) if num is not None else 1)
        if v is None:
            exp = 0
        else:
            if exp_s is None:
                raw, is_half = 1, False
            elif exp_s.endswith("/2"):
                raw, is_half = int(exp_s[:-2]), True
            else:
                raw, is_half = int(exp_s), False
            if half:
                exp = raw if is_half else 2 * raw
            else:
                if is_half:
                    raise ValueError("half-integer exponent in an integer-exponent context")
                exp = raw
        acc[exp] = acc.get(exp, 0) + coef
        pos = m.end()
        first = False
    return LaurentPoly(var, acc)


def parse(text: str, var: str) -> LaurentPoly:
    """Inverse of render.  The variable letter in the text must match var."""
    got = set(re.findall(r"[A-Za-z]", text))
    if got - {var}:
        raise ValueError(f"unexpected variable letters {sorted(got - {var})} (want {var!r})")
    return _parse_terms(text, var, half=False)


def parse_half(text: str, outer: str, var: str) -> LaurentPoly:
    """Parse half-integer exponent notation into the sqrt-variable var."""
    got = set(re.findall(r"[A-Za-z]", text))
    if got - {outer}:
        raise ValueError(f"unexpected variable letters {sorted(got - {outer})} (want {outer!r})")
    return _parse_terms(text, var, half=True)
