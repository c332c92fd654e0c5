"""Matsuo algebras A(G, D) and their signed doubles, with bilinear forms.

Basis vectors are indexed by integers: index ``i < |D|`` is the transposition
``i`` with sign ``+``; in the doubled ("hat") algebra index ``|D| + i`` is the
same transposition with sign ``-``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .roots import TranspositionSet, format_root, parse_root, regularity_degree
from .scalars import Field, RatFunc, Scalar, format_scalar, parse_scalar


class AlgebraError(ValueError):
    pass


class SingularAlphaError(AlgebraError):
    """The requested construction divides by zero at this value of alpha."""


class NotIdempotentError(AlgebraError):
    pass


@dataclass(frozen=True)
class BasisLabel:
    index: int
    sign: int = 1

    def __str__(self):
        return ("+" if self.sign > 0 else "-")


class AlgVector:
    """Sparse immutable vector: basis index -> nonzero scalar."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: "AlgebraSpace", coeffs: Mapping[int, Scalar] | None = None):
        self.space = space
        clean = {}
        for i, c in (coeffs or {}).items():
            if c != 0:
                space.field.check(c)
                clean[i] = c
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def _trusted(cls, space, coeffs):
        obj = cls.__new__(cls)
        obj.space = space
        obj.coeffs = dict(sorted((i, c) for i, c in coeffs.items() if c != 0))
        return obj

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs.get(i, self.space.field.zero)

    def items(self):
        return self.coeffs.items()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "AlgVector") -> "AlgVector":
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out[i] + c if i in out else c
        return AlgVector._trusted(self.space, out)

    def __neg__(self):
        return AlgVector._trusted(self.space, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "AlgVector") -> "AlgVector":
        return self + (-other)

    def __mul__(self, scalar) -> "AlgVector":
        if isinstance(scalar, AlgVector):
            return NotImplemented
        s = self.space.field(scalar)
        return AlgVector._trusted(self.space, {i: c * s for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def to_list(self) -> list:
        z = self.space.field.zero
        return [self.coeffs.get(i, z) for i in range(self.space.dimension)]

    def to_json(self) -> dict:
        return {self.space.label(i): format_scalar(c) for i, c in self.coeffs.items()}

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.to_json().items())
        return "{" + body + "}"


class AlgebraSpace:
    """A Matsuo algebra over QQ (rational alpha) or QQ(a) (formal alpha)."""

    def __init__(self, transpositions: TranspositionSet, alpha: Scalar, hat: bool = False):
        self.transpositions = transpositions
        self.hat = hat
        self.field = Field.of(alpha)
        self.alpha = self.field(alpha)
        self.half_alpha = self.alpha / 2
        self.n = len(transpositions)
        self.dimension = 2 * self.n if hat else self.n
        self._adj = transpositions.adjacency
        self._conj = transpositions.conjugation
        self._inner = transpositions.inner

    def __repr__(self):
        kind = "hat " if self.hat else ""
        return f"<{kind}Matsuo algebra {self.transpositions.id} over {self.field}, alpha={format_scalar(self.alpha)}>"

    # labels --------------------------------------------------------------
    def label_of(self, i: int) -> BasisLabel:
        return BasisLabel(i % self.n, 1 if i < self.n else -1)

    def label(self, i: int) -> str:
        lab = self.label_of(i)
        return str(lab) + format_root(self.transpositions.roots[lab.index])

    def index_of(self, label: str) -> int:
        sign, root = label[0], parse_root(label[1:])
        i = self.transpositions.index(root)
        if sign == "-":
            if not self.hat:
                raise AlgebraError("negative labels only exist in the hat algebra")
            i += self.n
        return i

    def basis_index(self, transposition, sign: int = 1) -> int:
        i = transposition if isinstance(transposition, int) else self.transpositions.index(transposition)
        if sign < 0:
            if not self.hat:
                raise AlgebraError("negative labels only exist in the hat algebra")
            return i + self.n
        return i

    # vectors -------------------------------------------------------------
    def zero(self) -> AlgVector:
        return AlgVector._trusted(self, {})

    def basis(self, i: int) -> AlgVector:
        return AlgVector._trusted(self, {i: self.field.one})

    def vector(self, coeffs: Mapping[int, object]) -> AlgVector:
        return AlgVector(self, {i: self.field(c) for i, c in coeffs.items()})

    def from_list(self, values: Sequence) -> AlgVector:
        return AlgVector(self, {i: v for i, v in enumerate(values)})

    def vector_from_json(self, data: Mapping[str, str]) -> AlgVector:
        return AlgVector(self, {self.index_of(k): parse_scalar(v, self.field)
                                for k, v in data.items()})

    def sum_of(self, transpositions: Iterable, sign: int = 1) -> AlgVector:
        one = self.field.one
        return AlgVector._trusted(self, {self.basis_index(t, sign): one for t in transpositions})

    # products ------------------------------------------------------------
    def _check(self, *vectors: AlgVector):
        for v in vectors:
            if v.space is not self:
                raise AlgebraError("vector belongs to a different algebra")

    def multiply(self, u: AlgVector, v: AlgVector) -> AlgVector:
        self._check(u, v)
        n, h = self.n, self.half_alpha
        inner, conj = self._inner, self._conj
        out: dict[int, Scalar] = {}
        for i, a in u.coeffs.items():
            ti, si = (i, 1) if i < n else (i - n, -1)
            row = inner[ti]
            for j, b in v.coeffs.items():
                tj, sj = (j, 1) if j < n else (j - n, -1)
                if ti == tj:
                    if si == sj:
                        out[j] = out[j] + a * b if j in out else a * b
                    continue
                if row[tj] == 0:
                    continue
                c = a * b * h
                k = conj[ti][tj] + (0 if si * sj > 0 else n)
                out[i] = out[i] + c if i in out else c
                out[j] = out[j] + c if j in out else c
                out[k] = out[k] - c if k in out else -c
        return AlgVector._trusted(self, out)

    def gram(self, u: AlgVector, v: AlgVector) -> Scalar:
        self._check(u, v)
        n, h = self.n, self.half_alpha
        inner = self._inner
        total = self.field.zero
        for i, a in u.coeffs.items():
            ti = i % n
            row = inner[ti]
            for j, b in v.coeffs.items():
                tj = j % n
                if ti == tj:
                    if i == j:
                        total = total + a * b
                elif row[tj] != 0:
                    total = total + a * b * h
        return total

    def basis_product(self, i: int, j: int) -> AlgVector:
        return self.multiply(self.basis(i), self.basis(j))


def construct_algebra(transpositions: TranspositionSet, alpha, hat: bool = False) -> AlgebraSpace:
    """Build A(G, D) (or its double when ``hat``) at ``alpha``.

    ``alpha`` is a rational (``Fraction``/``int``/``"1/4"``) or a RatFunc; the
    rational values 0 and 1 are rejected.
    """
    if isinstance(alpha, str):
        alpha = parse_scalar(alpha)
    if not isinstance(alpha, RatFunc):
        alpha = Fraction(alpha)
        if alpha in (0, 1):
            raise SingularAlphaError(f"alpha = {alpha} does not give distinct eigenvalues 1, 0, alpha")
    return AlgebraSpace(transpositions, alpha, hat)


def multiply(A: AlgebraSpace, u: AlgVector, v: AlgVector) -> AlgVector:
    return A.multiply(u, v)


def gram(A: AlgebraSpace, u: AlgVector, v: AlgVector) -> Scalar:
    return A.gram(u, v)


def central_charge(A: AlgebraSpace, x: AlgVector) -> Scalar:
    """Half the norm of ``x``."""
    return A.gram(x, x) / 2


# -- idempotents --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Idempotent:
    """An idempotent together with the transposition data it was built from.

    ``support``/``degree`` describe E for identities and coset axes;
    ``sub_support``/``sub_degree`` describe F for coset axes.
    """

    space: AlgebraSpace
    vector: AlgVector
    provenance: str = "user"
    support: tuple = ()
    degree: int | None = None
    sub_support: tuple = ()
    sub_degree: int | None = None
    sign: int = 1

    def __post_init__(self):
        if self.space.multiply(self.vector, self.vector) != self.vector:
            raise NotIdempotentError(f"{self.provenance} vector is not idempotent")

    @property
    def is_zero(self) -> bool:
        return self.vector.is_zero()


def _transposition_indices(A: AlgebraSpace, E: Iterable) -> tuple:
    idx = []
    for e in E:
        idx.append(e if isinstance(e, int) else A.transpositions.index(e))
    return tuple(sorted(set(idx)))


def axis(A: AlgebraSpace, d, sign: int = 1) -> Idempotent:
    i = _transposition_indices(A, [d])[0]
    return Idempotent(A, A.basis(A.basis_index(i, sign)), "axis", (i,), 0, sign=sign)


def _check_closed(A: AlgebraSpace, idx: tuple) -> None:
    members = set(idx)
    conj = A.transpositions.conjugation
    for c in idx:
        for d in idx:
            if conj[c][d] not in members:
                raise AlgebraError("subset is not closed under conjugation")


def subalgebra_identity(A: AlgebraSpace, E: Iterable) -> Idempotent:
    """Identity of the subalgebra generated by the plus-signed axes of ``E``.

    ``E`` must be closed under conjugation and k-regular; the identity is
    ``(sum of E) / (1 + alpha*k/2)``.  The empty set gives the zero vector.
    """
    idx = _transposition_indices(A, E)
    if not idx:
        return Idempotent(A, A.zero(), "identity", (), None)
    _check_closed(A, idx)
    k = regularity_degree([A.transpositions.roots[i] for i in idx])
    scale = 1 + A.half_alpha * k
    if scale == 0:
        raise SingularAlphaError(f"1 + alpha*{k}/2 vanishes at alpha = {format_scalar(A.alpha)}")
    vec = A.sum_of(idx) * (1 / scale)
    ident = Idempotent(A, vec, "identity", idx, k)
    for i in idx:
        b = A.basis(i)
        if A.multiply(vec, b) != b:
            raise AlgebraError("identity check failed")
    return ident


def coset_axis(A: AlgebraSpace, E: Iterable, F: Iterable) -> Idempotent:
    """``id_E - id_F`` for ``F`` inside ``E``; verified idempotent and orthogonal to ``id_F``."""
    e_idx = _transposition_indices(A, E)
    f_idx = _transposition_indices(A, F)
    if not set(f_idx) <= set(e_idx):
        raise AlgebraError("F is not contained in E")
    id_e = subalgebra_identity(A, e_idx)
    id_f = subalgebra_identity(A, f_idx)
    x = Idempotent(A, id_e.vector - id_f.vector, "coset", e_idx, id_e.degree,
                   f_idx, id_f.degree)
    if not A.multiply(x.vector, id_f.vector).is_zero():
        raise AlgebraError("coset axis does not annihilate the smaller identity")
    return x


def vector_json(v: AlgVector) -> str:
    return json.dumps(v.to_json(), sort_keys=False)
