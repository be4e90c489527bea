"""Exact linear algebra for small dense matrices.

Everything here works over exact rings: plain ints, Fractions, or any
type with ring operators plus exact // (LaurentPoly qualifies).  Sizes
are tiny (a diagram with n crossings never produces more than about an
n x n matrix), so the implementations favor being obviously correct
over being clever.
"""

from __future__ import annotations

from fractions import Fraction


def det_bareiss(rows, one=1):
    """Determinant by the fraction-free Bareiss scheme.

    Every division is by a previous pivot and is exact in any integral
    domain, so the int / LaurentPoly `//` operators never truncate.
    The 0 x 0 determinant is `one`.
    """
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ValueError("square matrix required")
    m = [list(r) for r in rows]
    neg = False
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    neg = not neg
                    break
            else:
                return one - one
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if neg else d


def signature_sym(rows) -> int:
    """Signature of a symmetric integer matrix.

    Congruence diagonalization over the rationals: the count of
    positive minus negative diagonal entries is invariant, zero rows
    contribute nothing.
    """
    n = len(rows)
    a = [[Fraction(rows[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    sig = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                i = swap
                a[k], a[i] = a[i], a[k]
                for row in a:
                    row[k], row[i] = row[i], row[k]
            else:
                spot = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            spot = (i, j)
                            break
                    if spot:
                        break
                if spot is None:
                    break
                i, j = spot
                for t in range(n):
                    a[i][t] += a[j][t]
                for t in range(n):
                    a[t][i] += a[t][j]
                if i != k:
                    a[k], a[i] = a[i], a[k]
                    for row in a:
                        row[k], row[i] = row[i], row[k]
        d = a[k][k]
        if d == 0:
            break
        sig += 1 if d > 0 else -1
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for j in range(n):
                    a[i][j] -= f * a[k][j]
                for j in range(n):
                    a[j][i] -= f * a[j][k]
    return sig


def rank_mod(rows, p: int) -> int:
    """Rank of an integer matrix over the field with p elements."""
    a = [[x % p for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    col = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] % p), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def corank_mod(rows, p: int) -> int:
    n = len(rows[0]) if rows else 0
    return n - rank_mod(rows, p)


def snf_diagonal(rows) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Returned entries are positive and each divides the next.  Used as an
    independent oracle for determinants and mod-p coranks of the same
    presentation matrices.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    out: list[int] = []
    t = 0
    while t < min(m, n):
        # locate a nonzero entry of minimal absolute value in the block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    qout = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= qout * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    qout = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= qout * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        # pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    for jj in range(t, n):
                        a[t][jj] += a[i][jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        out.append(abs(a[t][t]))
        t += 1
    return out
