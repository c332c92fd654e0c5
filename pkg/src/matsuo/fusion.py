"""Fusion tables, Z/2-gradings and Miyamoto involutions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg
from .algebra import AlgebraSpace, AlgVector, axis
from .scalars import format_scalar, parse_scalar
from .spectral import Eigendecomposition, SpectralError, eigendecompose, eta


class AutomorphismError(AssertionError):
    """A map that should be an algebra automorphism (or isometry) is not."""


class FusionTable:
    """Symmetric map (lambda, mu) -> set of eigenvalues."""

    def __init__(self, eigenvalues: Sequence, entries: Mapping):
        self.eigenvalues = tuple(eigenvalues)
        self._entries = {}
        for (lam, mu), vals in entries.items():
            vals = frozenset(vals)
            for v in vals:
                if v not in self.eigenvalues:
                    raise ValueError(f"{v} is not a listed eigenvalue")
            key = frozenset((lam, mu))
            if key in self._entries and self._entries[key] != vals:
                raise ValueError(f"asymmetric entry for {lam}, {mu}")
            self._entries[key] = vals

    def __getitem__(self, pair) -> frozenset:
        lam, mu = pair
        return self._entries.get(frozenset((lam, mu)), frozenset())

    def pairs(self):
        ev = self.eigenvalues
        for i in range(len(ev)):
            for j in range(i, len(ev)):
                yield ev[i], ev[j]

    def __eq__(self, other):
        if not isinstance(other, FusionTable):
            return NotImplemented
        return (set(self.eigenvalues) == set(other.eigenvalues)
                and all(self[p] == other[p] for p in self.pairs()))

    def is_contained_in(self, other: "FusionTable") -> bool:
        """Entrywise containment; every eigenvalue here must appear in ``other``."""
        if not set(self.eigenvalues) <= set(other.eigenvalues):
            return False
        return all(self[p] <= other[p] for p in self.pairs())

    def violations(self, other: "FusionTable") -> list:
        return [(p, self[p] - other[p]) for p in self.pairs() if not self[p] <= other[p]]

    def canonical(self) -> "FusionTable":
        """Same table with eigenvalues ordered 1, 0, then ascending (rational tables only)."""
        ev = sorted(self.eigenvalues, key=lambda v: (v != 1, v != 0, v))
        return FusionTable(ev, {p: self[p] for p in self.pairs()})

    def _ordered(self, vals) -> list:
        return [v for v in self.eigenvalues if v in vals]

    def to_json(self) -> dict:
        fmt = format_scalar
        return {
            "eigenvalues": [fmt(v) for v in self.eigenvalues],
            "table": {fmt(lam): {fmt(mu): [fmt(v) for v in self._ordered(self[lam, mu])]
                                 for mu in self.eigenvalues}
                      for lam in self.eigenvalues},
        }

    @classmethod
    def from_json(cls, data: Mapping, field=None) -> "FusionTable":
        ev = [parse_scalar(s, field) for s in data["eigenvalues"]]
        lookup = dict(zip(data["eigenvalues"], ev))
        entries = {}
        for l, row in data["table"].items():
            for m, vals in row.items():
                entries[(lookup[l], lookup[m])] = {lookup[v] for v in vals}
        return cls(ev, entries)

    def to_text(self, star: str = "*") -> str:
        """Aligned upper-triangular table, one row per eigenvalue."""
        labels = [format_scalar(v) for v in self.eigenvalues]
        cells = [[star] + labels]
        for i, lam in enumerate(self.eigenvalues):
            row = [labels[i]]
            for j, mu in enumerate(self.eigenvalues):
                if j < i:
                    row.append("")
                    continue
                vals = self._ordered(self[lam, mu])
                row.append("{" + ", ".join(format_scalar(v) for v in vals) + "}" if vals else "{}")
            cells.append(row)
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        lines = []
        for r, row in enumerate(cells):
            lines.append(" | ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip())
            if r == 0:
                lines.append("-+-".join("-" * w for w in widths))
        return "\n".join(lines)

    def __repr__(self):
        return f"FusionTable({[format_scalar(v) for v in self.eigenvalues]})"


# -- reference tables ---------------------------------------------------------

def table_from_rows(eigenvalues: Sequence, rows: Mapping) -> FusionTable:
    return FusionTable(eigenvalues, rows)


def assoc_rules(field=None) -> FusionTable:
    one, zero = (1, 0) if field is None else (field.one, field.zero)
    return FusionTable([one, zero], {(one, one): {one}, (one, zero): set(), (zero, zero): {zero}})


def phi3_rules(alpha) -> FusionTable:
    one, zero = alpha * 0 + 1, alpha * 0
    return FusionTable([one, zero, alpha], {
        (one, one): {one}, (one, zero): set(), (one, alpha): {alpha},
        (zero, zero): {zero}, (zero, alpha): {alpha},
        (alpha, alpha): {one, zero},
    })


def coset_rules(alpha, m: int, l: int) -> FusionTable:
    """The five-eigenvalue rules for the coset axis of Sym(m)/Sym(l)."""
    one, zero = alpha * 0 + 1, alpha * 0
    e, f, g = eta(alpha, m), 1 - eta(alpha, l), eta(alpha, m) - eta(alpha, l)
    ev = [one, zero, e, f, g]
    if len(set(ev)) != 5:
        raise ValueError("coset eigenvalues coincide at this alpha")
    return FusionTable(ev, {
        (one, one): {one}, (one, zero): set(), (one, e): {e}, (one, f): {f}, (one, g): {g},
        (zero, zero): {zero}, (zero, e): {e}, (zero, f): {f}, (zero, g): {g},
        (e, e): {one, zero, e}, (e, f): {g}, (e, g): {f, g},
        (f, f): {one, zero, f}, (f, g): {e, g},
        (g, g): {one, zero, e, f, g},
    })


# -- empirical tables ---------------------------------------------------------

def fusion_table(A: AlgebraSpace, dec: Eigendecomposition) -> FusionTable:
    """Fusion table read off from products of eigenbasis vectors.

    Each product is split exactly by the spectral projectors of ad(x), so an
    eigenvalue is recorded in an entry iff some product has a nonzero
    component there.
    """
    if not dec.complete:
        raise SpectralError("fusion tables need a complete decomposition")
    entries = {}
    pairs = list(dec.pairs)
    for i, (lam, us) in enumerate(pairs):
        for mu, vs in pairs[i:]:
            found: set = set()
            for a, u in enumerate(us):
                for b, v in enumerate(vs):
                    if lam == mu and b < a:
                        continue
                    found |= dec.support(A.multiply(u, v))
                    if len(found) == len(pairs):
                        break
                if len(found) == len(pairs):
                    break
            entries[(lam, mu)] = found
    return FusionTable(dec.eigenvalues, entries)


@dataclass(frozen=True)
class Grading:
    plus: frozenset
    minus: frozenset

    @property
    def trivial(self) -> bool:
        return not self.minus

    def sign(self, lam) -> int:
        return -1 if lam in self.minus else 1

    def to_json(self) -> dict:
        return {"plus": sorted(format_scalar(v) for v in self.plus),
                "minus": sorted(format_scalar(v) for v in self.minus)}


def is_grading(table: FusionTable, minus: Iterable) -> bool:
    minus = set(minus)
    for lam, mu in table.pairs():
        odd = (lam in minus) != (mu in minus)
        for v in table[lam, mu]:
            if (v in minus) != odd:
                return False
    return True


def find_z2_gradings(table: FusionTable) -> list[Grading]:
    """All partitions into even/odd parts compatible with the table.

    The eigenvalue 1 is kept even whenever 1 * 1 contains 1.  The trivial
    grading comes first.
    """
    ev = list(table.eigenvalues)
    one = next((v for v in ev if v == 1), None)
    pinned = one is not None and one in table[one, one]
    free = [v for v in ev if not (pinned and v == one)]
    found = []
    for r in range(len(free) + 1):
        for minus in itertools.combinations(free, r):
            if is_grading(table, minus):
                found.append(Grading(frozenset(v for v in ev if v not in minus), frozenset(minus)))
    return found


# -- Miyamoto involutions -----------------------------------------------------

class InvolutionMatrix:
    def __init__(self, space: AlgebraSpace, matrix: linalg.Matrix):
        self.space = space
        self.matrix = matrix

    def apply(self, v: AlgVector) -> AlgVector:
        return self.space.from_list(linalg.matvec(self.matrix, v.to_list()))

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def squares_to_identity(self) -> bool:
        sq = linalg.matmul(self.matrix, self.matrix)
        n = len(sq)
        return all(sq[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def miyamoto_involution(A: AlgebraSpace, dec: Eigendecomposition, grading: Grading,
                        table: FusionTable | None = None, verify: bool = True) -> InvolutionMatrix:
    """+1 on the even eigenspaces, -1 on the odd ones.

    With ``verify`` the result is checked to square to the identity, to be
    multiplicative on all basis pairs and to preserve the form; any failure
    raises :class:`AutomorphismError`.
    """
    if not dec.complete:
        raise SpectralError("Miyamoto involutions need a complete decomposition")
    if table is not None and not is_grading(table, grading.minus):
        raise ValueError("grading is not valid for the fusion table")
    n = A.dimension
    cols = []
    for j in range(n):
        comp = dec.components(A.basis(j))
        img = A.zero()
        for lam, coeffs in comp.items():
            s = grading.sign(lam)
            for c, w in zip(coeffs, dec.eigenspace(lam)):
                if c != 0:
                    img = img + w * (c * s)
        cols.append(img.to_list())
    tau = InvolutionMatrix(A, linalg.transpose(cols) if cols else [])
    if verify:
        verify_automorphism(A, tau)
    return tau


def verify_automorphism(A: AlgebraSpace, tau: InvolutionMatrix) -> None:
    if not tau.squares_to_identity():
        raise AutomorphismError("tau does not square to the identity")
    images = [tau.apply(A.basis(i)) for i in range(A.dimension)]
    for i in range(A.dimension):
        for j in range(i, A.dimension):
            bi, bj = A.basis(i), A.basis(j)
            if tau.apply(A.multiply(bi, bj)) != A.multiply(images[i], images[j]):
                raise AutomorphismError(f"tau is not multiplicative on {A.label(i)}, {A.label(j)}")
            if A.gram(images[i], images[j]) != A.gram(bi, bj):
                raise AutomorphismError(f"tau is not an isometry on {A.label(i)}, {A.label(j)}")


def standard_grading(alpha) -> Grading:
    one, zero = alpha * 0 + 1, alpha * 0
    return Grading(frozenset({one, zero}), frozenset({alpha}))


def axis_involution(A: AlgebraSpace, d, verify: bool = True) -> InvolutionMatrix:
    """Miyamoto involution of the basis axis ``d`` for the standard grading."""
    x = axis(A, d)
    dec = eigendecompose(A, x, [1, 0, A.alpha])
    if not dec.complete:
        raise SpectralError(f"axis {A.label(x.support[0])} is not semisimple")
    return miyamoto_involution(A, dec, standard_grading(A.alpha), verify=verify)


def check_axial_representation(A: AlgebraSpace, verify: bool = True) -> bool:
    """Whether tau(d) maps every c to c^d, for all pairs of transpositions."""
    if A.hat:
        raise ValueError("axial representation check applies to the plain algebra")
    conj = A.transpositions.conjugation
    for d in range(A.n):
        tau = axis_involution(A, d, verify=verify)
        for c in range(A.n):
            if tau.apply(A.basis(c)) != A.basis(conj[c][d]):
                return False
    return True


def primitivity(dec: Eigendecomposition) -> bool:
    one = dec.space.field.one
    return dec.dim(one) == 1
