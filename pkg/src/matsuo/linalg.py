"""Exact dense linear algebra over QQ or QQ(a).

Matrices are lists of rows.  Elimination pivots on the first nonzero entry;
with exact arithmetic no pivoting heuristics are needed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .scalars import poly_divmod, poly_eval, poly_trim

Matrix = list  # list[list[Scalar]]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    zero = A[0][0] * 0
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * cols
        for k, a in enumerate(row):
            if a == 0:
                continue
            for j, b in enumerate(B[k]):
                if b != 0:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Sequence) -> list:
    zero = A[0][0] * 0 if A else 0
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a != 0 and x != 0:
                acc = acc + a * x
        out.append(acc)
    return out


def sub_scalar(A: Matrix, lam) -> Matrix:
    """``A - lam * I``."""
    return [[a - lam if i == j else a for j, a in enumerate(row)] for i, row in enumerate(A)]


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of a copy of ``M`` and its pivot columns."""
    R = [list(row) for row in M]
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv if x != 0 else x for x in R[r]]
        pivot_row = R[r]
        nz = [j for j in range(c, cols) if pivot_row[j] != 0]
        for i in range(rows):
            if i != r:
                f = R[i][c]
                if f != 0:
                    row = R[i]
                    for j in nz:
                        row[j] = row[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def kernel(M: Matrix) -> list[list]:
    """Null-space basis, one vector per free column, read off the RREF."""
    if not M:
        return []
    cols = len(M[0])
    R, pivots = rref(M)
    zero = M[0][0] * 0
    one = zero + 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        basis.append(v)
    return basis


def inverse(M: Matrix) -> Matrix:
    n = len(M)
    zero = M[0][0] * 0
    one = zero + 1
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)]


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(x != 0 for x in v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(list(basis))


def minimal_polynomial(M: Matrix) -> tuple:
    """Monic minimal polynomial (ascending coefficients) of a square matrix.

    Found as the first linear dependence among I, M, M^2, ...; each new power
    is reduced against an echelon basis of the earlier ones while tracking the
    combination that produced it.
    """
    n = len(M)
    if n == 0:
        return (Fraction(1),)
    zero = M[0][0] * 0
    one = zero + 1
    echelon: list[tuple[int, dict, list]] = []  # (pivot, sparse vector, combination)
    power = identity(n, one, zero)
    k = 0
    while True:
        vec = {i * n + j: x for i, row in enumerate(power) for j, x in enumerate(row) if x != 0}
        comb = [zero] * k + [one]
        for pivot, evec, ecomb in echelon:
            f = vec.get(pivot)
            if f is None:
                continue
            f = f / evec[pivot]
            for key, x in evec.items():
                y = vec.get(key, zero) - f * x
                if y == 0:
                    vec.pop(key, None)
                else:
                    vec[key] = y
            for i, c in enumerate(ecomb):
                comb[i] = comb[i] - f * c
        if not vec:
            return tuple(comb)
        echelon.append((min(vec), vec, comb + []))
        echelon = [(p, v, c + [zero]) for p, v, c in echelon]
        power = matmul(power, M)
        k += 1


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Distinct rational roots of a polynomial with rational coefficients."""
    p = poly_trim(Fraction(c) for c in coeffs)
    roots = []
    if not p:
        raise ValueError("the zero polynomial has every root")
    while len(p) > 1 and p[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    for q in _divisors(ints[-1]):
        for s in _divisors(ints[0]):
            for cand in (Fraction(s, q), Fraction(-s, q)):
                if cand in roots:
                    continue
                if poly_eval(p, cand) == 0:
                    roots.append(cand)
    return roots


def deflate(coeffs: Sequence, roots: Sequence) -> tuple:
    """Divide out ``(t - r)`` for each root once; returns the quotient."""
    p = poly_trim(Fraction(c) for c in coeffs)
    for r in roots:
        q, rem = poly_divmod(p, (-r, Fraction(1)))
        if rem:
            raise ValueError(f"{r} is not a root")
        p = q
    return p
