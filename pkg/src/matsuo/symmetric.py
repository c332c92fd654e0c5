"""Sym(n) as the Weyl group of A_{n-1}: transpositions by points, nested identities.

Points are 1-based coordinates, so the transposition (i j) is the root
e_i - e_j.  Sym(m) always means the subgroup acting on points 1..m.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import AlgebraSpace, AlgVector, Idempotent, coset_axis, subalgebra_identity
from .roots import TranspositionSet, parabolic_subset


def _require_type_a(tset: TranspositionSet) -> None:
    if tset.id.family != "A":
        raise ValueError("point labels only make sense for type A")


def transposition(tset: TranspositionSet, i: int, j: int) -> int:
    """Index of the transposition (i j)."""
    _require_type_a(tset)
    if i == j:
        raise ValueError("a transposition needs two distinct points")
    i, j = min(i, j), max(i, j)
    root = [Fraction(0)] * tset.id.ambient_dimension
    root[i - 1], root[j - 1] = Fraction(1), Fraction(-1)
    return tset.index(root)


def support_indices(tset: TranspositionSet, points) -> tuple:
    """Indices of the transpositions moving only the given points."""
    return tuple(sorted(tset.index(r) for r in parabolic_subset(tset, points)))


def sym_identity(A: AlgebraSpace, m: int) -> Idempotent:
    """Identity of the subalgebra spanned by Sym(m) (points 1..m)."""
    return subalgebra_identity(A, support_indices(A.transpositions, range(1, m + 1)))


def sym_coset_axis(A: AlgebraSpace, m: int, l: int) -> Idempotent:
    """The coset axis id_{Sym(m)} - id_{Sym(l)}."""
    t = A.transpositions
    return coset_axis(A, support_indices(t, range(1, m + 1)), support_indices(t, range(1, l + 1)))


def _t(A: AlgebraSpace, i: int, j: int, sign: int = 1) -> AlgVector:
    return A.basis(A.basis_index(transposition(A.transpositions, i, j), sign))


def fixed_point_zero_vector(A: AlgebraSpace, m: int, z: int) -> AlgVector:
    """sum_{c <= m} (c z) - alpha * id_{Sym(m)} for a point z > m."""
    out = A.zero()
    for c in range(1, m + 1):
        out = out + _t(A, c, z)
    return out - sym_identity(A, m).vector * A.alpha


def eta_vector(A: AlgebraSpace, m: int, a: int, b: int, z: int) -> AlgVector:
    """An eta(m)-eigenvector of id_{Sym(m)} built from points a, b <= m < z.

    (2 + alpha(m-4)) ((a z) - (b z)) - alpha * sum_{c != a, b} ((a c) - (b c)).
    """
    alpha = A.alpha
    head = (_t(A, a, z) - _t(A, b, z)) * (2 + alpha * (m - 4))
    tail = A.zero()
    for c in range(1, m + 1):
        if c not in (a, b):
            tail = tail + _t(A, a, c) - _t(A, b, c)
    return head - tail * alpha


def hat_eta_vector(A: AlgebraSpace, first, second) -> AlgVector:
    """alpha(a+b-c-d)_+ + (1-alpha)(a+b-c-d)_- for commuting pairs {a,b}, {c,d}.

    ``first`` and ``second`` are pairs of point pairs, e.g. ((1, 2), (3, 4)).
    """
    if not A.hat:
        raise ValueError("signed vectors need the doubled algebra")
    alpha = A.alpha

    def part(sign):
        (a, b), (c, d) = first, second
        return (_t(A, *a, sign) + _t(A, *b, sign) - _t(A, *c, sign) - _t(A, *d, sign))

    return part(1) * alpha + part(-1) * (1 - alpha)


def matchings(points) -> list:
    """The three ways of splitting four points into two pairs."""
    p, q, r, s = points
    return [((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r))]


def hat_eta_vectors(A: AlgebraSpace, m: int):
    """All vectors ``hat_eta_vector`` over 4-subsets of 1..m and ordered matching pairs."""
    for quad in itertools.combinations(range(1, m + 1), 4):
        for first, second in itertools.permutations(matchings(quad), 2):
            yield (first, second), hat_eta_vector(A, first, second)


def minus_times_identity(A: AlgebraSpace, d: int) -> AlgVector:
    """Closed form of d_- * id_A in the doubled algebra of a k-regular set.

    alpha/(2 + alpha*k) * (k d_- + sum over noncommuting c of (c_+ - c_-)).
    """
    if not A.hat:
        raise ValueError("signed vectors need the doubled algebra")
    nbrs = A.transpositions.adjacency[d]
    k = len(nbrs)
    out = A.basis(A.basis_index(d, -1)) * k
    for c in nbrs:
        out = out + A.basis(c) - A.basis(A.basis_index(c, -1))
    return out * (A.alpha / (2 + A.alpha * k))
