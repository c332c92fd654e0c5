"""Eigenspace decompositions of adjoint maps of idempotents."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .algebra import AlgebraSpace, AlgVector, Idempotent
from .scalars import format_scalar, poly_mul


class SpectralError(ValueError):
    pass


class ContainmentError(AssertionError):
    """An eigenspace containment that must hold does not."""


def eta(alpha, m):
    """Nontrivial eigenvalue of the identity of D(Sym(m)) inside a larger algebra."""
    return alpha * m / (2 + 2 * alpha * (m - 2))


def eta_hat(alpha, m):
    """Extra eigenvalue of the identity of D(Sym(m)) on the negative half of the double."""
    return alpha * (m - 1) / (1 + alpha * (m - 2))


def sym_degree_to_m(k: int | None) -> int:
    """``m`` such that D(Sym(m)) is ``k``-regular (k = 2m - 4); empty sets give 1."""
    if k is None:
        return 1
    return (k + 4) // 2


def ad_matrix(A: AlgebraSpace, x: AlgVector) -> linalg.Matrix:
    """Matrix of ``b -> x b`` in the basis of ``A`` (column j is the image of b_j)."""
    n = A.dimension
    zero = A.field.zero
    M = [[zero] * n for _ in range(n)]
    for j in range(n):
        for i, c in A.multiply(x, A.basis(j)).items():
            M[i][j] = c
    return M


def kernel(M: linalg.Matrix) -> list[list]:
    return linalg.kernel(M)


def minimal_polynomial(M: linalg.Matrix) -> tuple:
    return linalg.minimal_polynomial(M)


def _sort_key(lam):
    return -lam


@dataclass(frozen=True, eq=False)
class Eigendecomposition:
    space: AlgebraSpace
    idempotent: Idempotent
    pairs: tuple  # ((eigenvalue, (AlgVector, ...)), ...)
    complete: bool
    missing: tuple = ()
    minimal_polynomial: tuple | None = None
    matrix: list | None = None  # ad(x), kept for sparse projections

    @property
    def eigenvalues(self) -> list:
        return [lam for lam, _ in self.pairs]

    @property
    def dims(self) -> dict:
        return {lam: len(vs) for lam, vs in self.pairs}

    def dim(self, lam) -> int:
        return len(self.eigenspace(lam))

    def eigenspace(self, lam) -> tuple:
        for mu, vs in self.pairs:
            if mu == lam:
                return vs
        return ()

    @cached_property
    def _blocks(self):
        if not self.complete:
            raise SpectralError("decomposition is incomplete; eigenbasis coordinates are undefined")
        cols = [v.to_list() for _, vs in self.pairs for v in vs]
        P = linalg.transpose(cols)
        Pinv = linalg.inverse(P)
        blocks, start = [], 0
        for lam, vs in self.pairs:
            blocks.append((lam, start, start + len(vs)))
            start += len(vs)
        return Pinv, blocks

    def components(self, v: AlgVector) -> dict:
        """Coordinates of ``v`` in the eigenbasis, grouped by eigenvalue."""
        Pinv, blocks = self._blocks
        coords = linalg.matvec(Pinv, v.to_list())
        return {lam: coords[a:b] for lam, a, b in blocks}

    @cached_property
    def _projectors(self):
        """Sparse columns of ad(x) and Lagrange coefficients of each spectral projector."""
        if not self.complete:
            raise SpectralError("decomposition is incomplete; projections are undefined")
        one = self.space.field.one
        cols = [[] for _ in range(len(self.matrix))]
        for i, row in enumerate(self.matrix):
            for j, x in enumerate(row):
                if x != 0:
                    cols[j].append((i, x))
        lagrange = []
        for lam in self.eigenvalues:
            poly = (one,)
            for mu in self.eigenvalues:
                if mu != lam:
                    scale = one / (lam - mu)
                    poly = poly_mul(poly, (-mu * scale, scale))
            lagrange.append((lam, poly))
        return cols, lagrange

    def support(self, v: AlgVector) -> set:
        """Eigenvalues on which ``v`` has a nonzero component."""
        if self.matrix is None:
            return {lam for lam, c in self.components(v).items() if any(x != 0 for x in c)}
        cols, lagrange = self._projectors
        krylov = [dict(v.coeffs)]
        for _ in range(len(lagrange) - 1):
            out: dict = {}
            for j, w in krylov[-1].items():
                for i, x in cols[j]:
                    out[i] = out[i] + x * w if i in out else x * w
            krylov.append({i: x for i, x in out.items() if x != 0})
        found = set()
        for lam, poly in lagrange:
            acc: dict = {}
            for c, vec in zip(poly, krylov):
                if c == 0:
                    continue
                for i, x in vec.items():
                    acc[i] = acc[i] + c * x if i in acc else c * x
            if any(x != 0 for x in acc.values()):
                found.add(lam)
        return found

    def projection(self, v: AlgVector, lam) -> AlgVector:
        comp = self.components(v)[lam]
        out = self.space.zero()
        for c, w in zip(comp, self.eigenspace(lam)):
            if c != 0:
                out = out + w * c
        return out

    def to_json(self) -> list:
        return [{"eigenvalue": format_scalar(lam), "dim": len(vs),
                 "basis": [v.to_json() for v in vs]} for lam, vs in self.pairs]


def eigendecompose(A: AlgebraSpace, x: Idempotent, candidates: Sequence | None = None) -> Eigendecomposition:
    """Decompose ``A`` into eigenspaces of ``ad(x)``.

    Without candidates (rational mode only) the eigenvalues are the rational
    roots of the minimal polynomial.  ``complete`` records whether the
    eigenspaces found fill the whole algebra.
    """
    vec = x.vector if isinstance(x, Idempotent) else x
    if vec.is_zero():
        raise SpectralError("the zero idempotent has no meaningful decomposition")
    M = ad_matrix(A, vec)
    minpoly = None
    if candidates is None:
        if A.field.symbolic:
            raise SpectralError("symbolic algebras need candidate eigenvalues")
        minpoly = linalg.minimal_polynomial(M)
        values = sorted(linalg.rational_roots(minpoly), key=_sort_key)
    else:
        values = []
        for c in candidates:
            c = A.field(c)
            if c not in values:
                values.append(c)
    pairs, missing = [], []
    for lam in values:
        ker = linalg.kernel(linalg.sub_scalar(M, lam))
        if ker:
            pairs.append((lam, tuple(A.from_list(v) for v in ker)))
        else:
            missing.append(lam)
    total = sum(len(vs) for _, vs in pairs)
    idem = x if isinstance(x, Idempotent) else Idempotent(A, vec)
    return Eigendecomposition(A, idem, tuple(pairs), total == A.dimension, tuple(missing), minpoly, M)


def closed_form_candidates(A: AlgebraSpace, x: Idempotent) -> list:
    """Closed-form eigenvalue candidates for axes, identities and coset axes in type A."""
    a = A.alpha
    one, zero = A.field.one, A.field.zero
    if x.provenance == "axis":
        return [one, zero, a]
    if A.transpositions.id.family != "A":
        raise SpectralError("closed-form candidates are only known for type A")
    m = sym_degree_to_m(x.degree)
    if x.provenance == "identity":
        out = [one, zero, eta(a, m)]
        if A.hat:
            out.append(eta_hat(a, m))
        return out
    if x.provenance == "coset":
        l = sym_degree_to_m(x.sub_degree)
        out = [one, zero, eta(a, m)]
        if l >= 2:
            out += [1 - eta(a, l), eta(a, m) - eta(a, l)]
        if A.hat:
            out.append(eta_hat(a, m) - (eta(a, l) if l >= 2 else zero))
            if l >= 2:
                out.append(eta_hat(a, m) - eta_hat(a, l))
        return out
    raise SpectralError(f"no closed-form candidates for a {x.provenance} idempotent")


@dataclass
class ContainmentReport:
    commute: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.commute and all(self.checks.values())

    def to_json(self) -> dict:
        return {"commute": self.commute, "checks": dict(self.checks), "ok": self.ok}


def contained_in(vectors: Iterable[AlgVector], dec: Eigendecomposition, allowed: Iterable) -> bool:
    """Whether every vector lies in the sum of ``dec``'s eigenspaces for ``allowed``."""
    allowed = set(allowed)
    return all(dec.support(v) <= allowed for v in vectors)


def _decompose(A, x, dec):
    if dec is not None:
        return dec
    cands = None if not A.field.symbolic else closed_form_candidates(A, x)
    return eigendecompose(A, x, cands)


def check_containments(A: AlgebraSpace, id_m: Idempotent, id_l: Idempotent,
                       dec_m: Eigendecomposition | None = None,
                       dec_l: Eigendecomposition | None = None) -> ContainmentReport:
    """Check that the identities of D(Sym(m)) and D(Sym(l)) interact as for coset axes.

    Verifies that the adjoint maps commute and that

    * the 1-space of id_l lies in the 1-space of id_m,
    * the 0-space of id_m lies in the 0-space of id_l,
    * the eta(m)-space of id_m lies in the 0 + eta(l) spaces of id_l,

    and, in the doubled algebra with l = m - 1, that the eta_hat(m)-space of
    id_m lies in the eta(l) + eta_hat(l) spaces of id_l.  Raises
    :class:`ContainmentError` on failure.
    """
    dec_m = _decompose(A, id_m, dec_m)
    dec_l = _decompose(A, id_l, dec_l)
    if not (dec_m.complete and dec_l.complete):
        raise SpectralError("containments need complete decompositions")
    Mm = ad_matrix(A, id_m.vector)
    Ml = ad_matrix(A, id_l.vector)
    report = ContainmentReport(linalg.matmul(Mm, Ml) == linalg.matmul(Ml, Mm))
    a = A.alpha
    zero, one = A.field.zero, A.field.one
    m, l = sym_degree_to_m(id_m.degree), sym_degree_to_m(id_l.degree)
    eta_m, eta_l = eta(a, m), eta(a, l)
    report.checks["one_l_in_one_m"] = contained_in(dec_l.eigenspace(one), dec_m, [one])
    report.checks["zero_m_in_zero_l"] = contained_in(dec_m.eigenspace(zero), dec_l, [zero])
    report.checks["eta_m_in_zero_eta_l"] = contained_in(dec_m.eigenspace(eta_m), dec_l, [zero, eta_l])
    if A.hat and l == m - 1:
        report.checks["eta_hat_m_in_eta_eta_hat_l"] = contained_in(
            dec_m.eigenspace(eta_hat(a, m)), dec_l, [eta_l, eta_hat(a, l)])
    if not report.ok:
        failed = [k for k, v in report.checks.items() if not v]
        if not report.commute:
            failed.insert(0, "commute")
        raise ContainmentError(f"containment failures: {failed}")
    return report
