"""Simply-laced Weyl groups as 3-transposition groups.

A transposition is identified with a positive root: the reflection in that
root.  Two reflections commute iff their roots are orthogonal, and the
conjugate of ``c`` by ``d`` is the reflection of ``c`` in ``d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple  # tuple of Fractions


class RootSystemError(ValueError):
    pass


class NotRegularError(ValueError):
    """The noncommuting graph on a subset is not regular."""


COXETER_E = {6: 12, 7: 18, 8: 30}


@dataclass(frozen=True)
class RootSystemId:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam == "A" and self.rank >= 1:
            return
        if fam == "D" and self.rank >= 4:
            return
        if fam == "E" and self.rank in COXETER_E:
            return
        raise RootSystemError(f"no root system {self.family}_{self.rank}")

    @property
    def coxeter_number(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return 2 * self.rank - 2
        return COXETER_E[self.rank]

    @property
    def ambient_dimension(self) -> int:
        return {"A": self.rank + 1, "D": self.rank, "E": 8}[self.family]

    def __str__(self):
        return f"{self.family}{self.rank}"


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def normalize(v: Sequence) -> Root:
    """Sign-normalise so the first nonzero coordinate is positive."""
    for x in v:
        if x != 0:
            return tuple(Fraction(y) for y in v) if x > 0 else tuple(-Fraction(y) for y in v)
    raise RootSystemError("zero vector is not a root")


def _e8_roots() -> list[Root]:
    roots = set()
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.add(tuple(v))
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(tuple(s * half for s in signs))
    return sorted(roots)


# E7 and E6 are cut out of E8 as centralisers of a root and of an A2.
_E7_PERP = [(0, 0, 0, 0, 0, 0, 1, 1)]
_E6_PERP = [(0, 0, 0, 0, 0, 0, 1, 1), (0, 0, 0, 0, 0, 1, -1, 0)]


def positive_roots(rid: RootSystemId) -> list[Root]:
    n = rid.rank
    if rid.family == "A":
        roots = []
        for i, j in itertools.combinations(range(n + 1), 2):
            v = [Fraction(0)] * (n + 1)
            v[i], v[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
    elif rid.family == "D":
        roots = []
        for i, j in itertools.combinations(range(n), 2):
            for sj in (-1, 1):
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(1), Fraction(sj)
                roots.append(tuple(v))
    else:
        perp = {6: _E6_PERP, 7: _E7_PERP, 8: []}[n]
        roots = [r for r in _e8_roots()
                 if all(dot(r, p) == 0 for p in perp) and normalize(r) == r]
    return sorted(roots)


@dataclass(frozen=True)
class TranspositionSet:
    """The transposition pair (G, D) with D realised as positive roots."""

    id: RootSystemId
    roots: tuple
    _index: dict = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r: i for i, r in enumerate(self.roots)})

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def index(self, root: Sequence) -> int:
        return self._index[normalize(root)]

    @cached_property
    def inner(self) -> list[list[Fraction]]:
        return [[dot(r, s) for s in self.roots] for r in self.roots]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Indices of noncommuting partners, per transposition."""
        return [[j for j, x in enumerate(row) if x != 0 and j != i]
                for i, row in enumerate(self.inner)]

    @cached_property
    def conjugation(self) -> list[list[int]]:
        """``conjugation[c][d]`` is the index of ``c^d``."""
        table = []
        for i, c in enumerate(self.roots):
            row = []
            for j, d in enumerate(self.roots):
                ip = self.inner[i][j]
                if ip == 0 or i == j:
                    row.append(i)
                else:
                    row.append(self.index(tuple(x - ip * y for x, y in zip(c, d))))
            table.append(row)
        return table

    def noncommuting(self, i: int, j: int) -> bool:
        return i != j and self.inner[i][j] != 0


def build_transposition_set(rid: RootSystemId | str, rank: int | None = None) -> TranspositionSet:
    """Build D(X_n); accepts ``RootSystemId`` or ``("A", 4)``-style arguments."""
    if not isinstance(rid, RootSystemId):
        rid = RootSystemId(rid, rank)
    return TranspositionSet(rid, tuple(positive_roots(rid)))


def conjugate(c: Sequence, d: Sequence) -> Root:
    """``c^d``: the reflection of root ``c`` in root ``d``, normalised positive."""
    ip = dot(c, d)
    return normalize([x - ip * y for x, y in zip(c, d)])


def commutes(c: Sequence, d: Sequence) -> bool:
    return dot(c, d) == 0 or normalize(c) == normalize(d)


def reflection_product_order(c: Sequence, d: Sequence) -> int:
    """Order of the product of the reflections in ``c`` and ``d``."""
    if normalize(c) == normalize(d):
        return 1
    ip = abs(dot(c, d))
    # Roots of equal length 2: angle pi/2 gives order 2, pi/3 gives order 3.
    return {0: 2, 1: 3}[ip]


def parabolic_subset(tset: TranspositionSet, support: Iterable[int]) -> list[Root]:
    """Roots whose nonzero coordinates lie in ``support`` (1-based coordinates)."""
    allowed = {i - 1 for i in support}
    return [r for r in tset.roots
            if all(i in allowed for i, x in enumerate(r) if x != 0)]


def regularity_degree(subset: Sequence[Sequence]) -> int:
    """The common number of noncommuting partners inside ``subset``."""
    if not subset:
        raise NotRegularError("empty subset has no regularity degree")
    degrees = {sum(1 for d in subset if dot(c, d) != 0 and normalize(c) != normalize(d))
               for c in subset}
    if len(degrees) != 1:
        raise NotRegularError(f"noncommuting degrees {sorted(degrees)} are not constant")
    return degrees.pop()


def format_root(root: Sequence) -> str:
    return "[" + ",".join(str(x) for x in root) + "]"


def parse_root(text: str) -> Root:
    body = text.strip().strip("[]")
    return tuple(Fraction(x) for x in body.split(","))
