"""Monomial matrices over roots of unity and the finite groups they generate.

A monomial map on C^n sends the basis vector e_j to a root-of-unity multiple
of e_{perm[j]}.  Groups are closed by breadth-first search from sorted
generators and stored as index tables, which keeps every later computation a
table lookup.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cyclotomic import CyclotomicNumber, RationalPhase, conductor_cap
from .errors import ConsistencyError, InputError, ResourceCapError

__all__ = [
    "DEFAULT_GROUP_ORDER_CAP",
    "ConjugacyPartition",
    "GroupTable",
    "MonomialMap",
]

DEFAULT_GROUP_ORDER_CAP = 10000


@dataclass(frozen=True)
class MonomialMap:
    """A linear map sending e_j to e^(2*pi*i*phases[j]) * e_{perm[j]}."""

    perm: tuple[int, ...]
    phases: tuple[RationalPhase, ...]

    def __post_init__(self) -> None:
        perm = tuple(self.perm)
        phases = tuple(self.phases)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "phases", phases)
        n = len(perm)
        if len(phases) != n:
            raise InputError(f"permutation of length {n} given {len(phases)} phases")
        if sorted(perm) != list(range(n)):
            raise InputError(f"perm {list(perm)!r} is not a permutation of 0..{n - 1}")
        for p in phases:
            if not isinstance(p, RationalPhase):
                raise InputError(f"phases must be RationalPhase values, got {p!r}")

    @staticmethod
    def identity(dimension: int) -> "MonomialMap":
        if type(dimension) is not int or dimension < 0:
            raise InputError(f"dimension must be a nonnegative integer, got {dimension!r}")
        return MonomialMap(tuple(range(dimension)), (RationalPhase(0),) * dimension)

    @property
    def dimension(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return all(p == j for j, p in enumerate(self.perm)) and not any(
            ph.numerator for ph in self.phases
        )

    def __mul__(self, other: "MonomialMap") -> "MonomialMap":
        """Composition self o other (apply other first)."""
        if not isinstance(other, MonomialMap):
            return NotImplemented
        if other.dimension != self.dimension:
            raise InputError(
                f"cannot compose maps of dimensions {self.dimension} and {other.dimension}"
            )
        perm = tuple(self.perm[j] for j in other.perm)
        phases = tuple(
            other.phases[j] + self.phases[other.perm[j]] for j in range(self.dimension)
        )
        return MonomialMap(perm, phases)

    def inverse(self) -> "MonomialMap":
        n = self.dimension
        perm = [0] * n
        phases: list[RationalPhase] = [RationalPhase(0)] * n
        for j in range(n):
            perm[self.perm[j]] = j
            phases[self.perm[j]] = -self.phases[j]
        return MonomialMap(tuple(perm), tuple(phases))

    def dual(self) -> "MonomialMap":
        """The conjugate map: same permutation, every phase negated mod 1."""
        return MonomialMap(self.perm, tuple(-p for p in self.phases))

    def double(self) -> "MonomialMap":
        """Block sum with the dual: the action on C^n + conjugate(C^n)."""
        n = self.dimension
        perm = self.perm + tuple(n + q for q in self.perm)
        phases = self.phases + tuple(-p for p in self.phases)
        return MonomialMap(perm, phases)

    def trace(self) -> CyclotomicNumber:
        """Exact matrix trace: diagonal entries come from fixed indices only."""
        total = CyclotomicNumber.zero()
        for j, image in enumerate(self.perm):
            if image == j:
                total = total + CyclotomicNumber.from_phase(self.phases[j])
        return total

    def sort_key(self) -> tuple:
        return (self.perm, tuple((p.numerator, p.denominator) for p in self.phases))

    def __str__(self) -> str:
        entries = ", ".join(
            f"e{j}->({p})e{q}" for j, (q, p) in enumerate(zip(self.perm, self.phases))
        )
        return f"[{entries}]"


@dataclass(frozen=True)
class ConjugacyPartition:
    """Conjugacy classes as sorted index tuples, in order of least member."""

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


class GroupTable:
    """A finite group of monomial maps closed from generators.

    Elements are indexed in breadth-first discovery order (index 0 is the
    identity).  Multiplication is a dense table for small groups and a cached
    canonical-form lookup for large ones; both are exact.
    """

    # Above this order the dense |G|^2 multiplication table is not
    # materialized; products are resolved through the canonical-form index.
    EAGER_TABLE_LIMIT = 2048

    def __init__(
        self,
        elements: list[MonomialMap],
        index: dict[MonomialMap, int],
        gens: tuple[int, ...],
        inverse_index: tuple[int, ...],
        mult_rows: Optional[list[list[int]]],
    ):
        self.elements = elements
        self.index = index
        self.gens = gens
        self.inverse_index = inverse_index
        self._mult_rows = mult_rows
        self._pair_cache: dict[tuple[int, int], int] = {}
        self._classes: Optional[ConjugacyPartition] = None

    @classmethod
    def close(
        cls,
        generators: Iterable[MonomialMap],
        dimension: int,
        cap: int = DEFAULT_GROUP_ORDER_CAP,
    ) -> "GroupTable":
        """Breadth-first closure of the generators into a full group table."""
        if type(cap) is not int or cap < 1:
            raise InputError(f"group order cap must be a positive integer, got {cap!r}")
        gens = sorted(set(generators), key=MonomialMap.sort_key)
        for g in gens:
            if g.dimension != dimension:
                raise InputError(
                    f"generator of dimension {g.dimension} in a dimension-{dimension} orbifold"
                )
        denom_lcm = 1
        for g in gens:
            for p in g.phases:
                denom_lcm = math.lcm(denom_lcm, p.denominator)
        if denom_lcm > conductor_cap():
            raise ResourceCapError(
                f"generator phases need conductor {denom_lcm}, above the cap {conductor_cap()}"
            )

        identity = MonomialMap.identity(dimension)
        elements: list[MonomialMap] = [identity]
        index: dict[MonomialMap, int] = {identity: 0}
        parent_gen: list[tuple[int, int]] = [(-1, -1)]
        queue: deque[int] = deque([0])
        while queue:
            i = queue.popleft()
            x = elements[i]
            for gpos, g in enumerate(gens):
                y = x * g
                if y not in index:
                    if len(elements) >= cap:
                        raise ResourceCapError(
                            f"group not closed within cap {cap} elements"
                        )
                    j = len(elements)
                    elements.append(y)
                    index[y] = j
                    parent_gen.append((i, gpos))
                    queue.append(j)

        order = len(elements)
        inverse_index = tuple(index[e.inverse()] for e in elements)

        mult_rows: Optional[list[list[int]]] = None
        if order <= cls.EAGER_TABLE_LIMIT:
            # row recurrence: e_i = e_p * g implies e_i e_j = e_p (g e_j), so a
            # row is the parent's row permuted through g's left-multiplication.
            left = [[index[g * e] for e in elements] for g in gens]
            rows: list[list[int]] = [list(range(order))]
            for i in range(1, order):
                p, gpos = parent_gen[i]
                parent_row = rows[p]
                lg = left[gpos]
                rows.append([parent_row[lg[j]] for j in range(order)])
            mult_rows = rows

        return cls(elements, index, tuple(index[g] for g in gens), inverse_index, mult_rows)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def mult(self, i: int, j: int) -> int:
        if self._mult_rows is not None:
            return self._mult_rows[i][j]
        key = (i, j)
        value = self._pair_cache.get(key)
        if value is None:
            value = self.index[self.elements[i] * self.elements[j]]
            self._pair_cache[key] = value
        return value

    def element_order(self, i: int) -> int:
        m = 1
        x = i
        while x != 0:
            x = self.mult(x, i)
            m += 1
        return m

    def conjugate(self, g: int, by: int) -> int:
        """Index of by^-1 * g * by."""
        return self.mult(self.mult(self.inverse_index[by], g), by)

    def conjugation_permutation(self, by: int) -> tuple[int, ...]:
        return tuple(self.conjugate(g, by) for g in range(self.order))

    def conjugacy_classes(self) -> ConjugacyPartition:
        if self._classes is None:
            order = self.order
            class_of = [-1] * order
            classes: list[tuple[int, ...]] = []
            for g in range(order):
                if class_of[g] >= 0:
                    continue
                orbit = sorted({self.conjugate(g, k) for k in range(order)})
                cid = len(classes)
                for member in orbit:
                    if class_of[member] >= 0:
                        raise ConsistencyError("conjugation orbits are not disjoint")
                    class_of[member] = cid
                classes.append(tuple(orbit))
            self._classes = ConjugacyPartition(
                classes=tuple(classes),
                representatives=tuple(c[0] for c in classes),
                class_of=tuple(class_of),
            )
        return self._classes

    def subgroup_closure(self, seed: Iterable[int]) -> tuple[int, ...]:
        """Smallest subgroup containing the seed indices, as a sorted tuple."""
        gens = sorted(set(seed))
        for s in gens:
            if not 0 <= s < self.order:
                raise InputError(f"element index {s} out of range")
        members = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for s in gens:
                y = self.mult(x, s)
                if y not in members:
                    members.add(y)
                    queue.append(y)
        return tuple(sorted(members))
