"""Small exact linear-algebra helpers over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

IntVec = tuple[int, ...]


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(int(x) // g for x in v)


def rational_to_primitive(v: Sequence[Fraction]) -> IntVec:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[IntVec]:
    """Lattice basis of {x in Z^n : A x = 0}.

    Column operations by unimodular matrices reduce A to column echelon form;
    the transformed unit vectors sitting under the zero columns span the kernel
    lattice (it is saturated because the transform is unimodular).
    """
    a = [list(map(int, r)) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of u track operations

    def col_op(i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        # (col_i, col_j) <- (p col_i + q col_j, r col_i + s col_j)
        for mat in (a, u):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + q * y, r * x + s * y

    pivot = 0
    for r in range(len(a)):
        if pivot >= n:
            break
        for j in range(pivot + 1, n):
            while a[r][j] != 0:
                x, y = a[r][pivot], a[r][j]
                if x == 0:
                    col_op(pivot, j, 0, 1, 1, 0)
                    continue
                q = y // x
                col_op(pivot, j, 1, 0, -q, 1)  # col_j -= q col_pivot
                if a[r][j] != 0:
                    col_op(pivot, j, 0, 1, 1, 0)
        if a[r][pivot] != 0:
            pivot += 1
    return [tuple(u[i][j] for i in range(n)) for j in range(pivot, n)]


def rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


def solve_left(rows: Sequence[Sequence[int]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Find z with sum_i z_i rows[i] == target, or None when target is not in the row space."""
    k = len(rows)
    n = len(target)
    # Gaussian elimination on the transposed system (n equations, k unknowns)
    aug = [[Fraction(rows[i][c]) for i in range(k)] + [Fraction(target[c])] for c in range(n)]
    piv_cols: list[int] = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    z = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        z[c] = aug[i][k]
    return z


def project_out(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[Fraction]:
    """Orthogonal projection of v onto the complement of span(basis)."""
    if not basis:
        return [Fraction(x) for x in v]
    k = len(basis)
    gram = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(basis[i], v)) for i in range(k)]
    coeffs = solve_left(gram, rhs)
    assert coeffs is not None
    out = [Fraction(x) for x in v]
    for c, b in zip(coeffs, basis):
        out = [o - c * bi for o, bi in zip(out, b)]
    return out
