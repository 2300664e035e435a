"""Exact sector geometry of a linear orbifold.

Per group element: the multiset of rotation numbers (eigen-phases), the age,
the fixed-subspace dimension, and the two degree shifts.  Per pair: the
dimension of the common fixed subspace, computed by the averaging projector of
the generated subgroup, so no linear algebra over cyclotomic fields is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cyclotomic import CyclotomicNumber, RationalPhase
from .errors import ConsistencyError
from .monomial import GroupTable, MonomialMap

__all__ = [
    "SectorData",
    "SectorGeometry",
    "age",
    "cr_shift",
    "eigen_phases",
    "fixed_dim",
    "virtual_shift",
]

_ZERO_PHASE = RationalPhase(0)


def eigen_phases(m: MonomialMap) -> tuple[RationalPhase, ...]:
    """Sorted multiset of rotation numbers of a monomial map.

    A permutation cycle of length L whose phases sum to s (mod 1) spans an
    invariant subspace on which the L-th power of the map is the scalar
    e^(2*pi*i*s); its eigenvalues are therefore the L roots e^(2*pi*i*(s+t)/L),
    t = 0..L-1.
    """
    n = m.dimension
    seen = [False] * n
    out: list[RationalPhase] = []
    for start in range(n):
        if seen[start]:
            continue
        total = Fraction(0)
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            total += m.phases[j].as_fraction()
            length += 1
            j = m.perm[j]
        s = total % 1
        for t in range(length):
            out.append(RationalPhase.from_fraction((s + t) / length))
    out.sort()
    return tuple(out)


def age(m: MonomialMap) -> Fraction:
    return sum((p.as_fraction() for p in eigen_phases(m)), Fraction(0))


def fixed_dim(m: MonomialMap) -> int:
    return sum(1 for p in eigen_phases(m) if p == _ZERO_PHASE)


def virtual_shift(m: MonomialMap) -> int:
    return 2 * (m.dimension - fixed_dim(m))


def cr_shift(m: MonomialMap) -> Fraction:
    return 2 * age(m)


@dataclass(frozen=True)
class SectorData:
    """Geometric data of one sector (one group element)."""

    element: int
    eigen: tuple[RationalPhase, ...]
    age: Fraction
    fixed_dim: int
    virtual_shift: int
    cr_shift: Fraction


class SectorGeometry:
    """Cached per-element and per-pair geometry over a closed group.

    With forget=True the group is treated as acting on a zero-dimensional
    space: every age and fixed dimension is zero.  That realizes the
    point-orbifold (group-ring) limit for an arbitrary finite group without
    needing a zero-dimensional faithful representation.
    """

    def __init__(self, table: GroupTable, dimension: int, forget: bool = False):
        self.table = table
        self.forget = forget
        self.n = 0 if forget else dimension
        self._sectors: dict[int, SectorData] = {}
        self._traces: dict[int, CyclotomicNumber] = {}
        self._pairs: dict[tuple[int, int], int] = {}

    def sector(self, i: int) -> SectorData:
        data = self._sectors.get(i)
        if data is None:
            if self.forget:
                data = SectorData(i, (), Fraction(0), 0, 0, Fraction(0))
            else:
                eigen = eigen_phases(self.table.elements[i])
                a = sum((p.as_fraction() for p in eigen), Fraction(0))
                fd = sum(1 for p in eigen if p == _ZERO_PHASE)
                data = SectorData(i, eigen, a, fd, 2 * (self.n - fd), 2 * a)
            self._sectors[i] = data
        return data

    def eigen(self, i: int) -> tuple[RationalPhase, ...]:
        return self.sector(i).eigen

    def age(self, i: int) -> Fraction:
        return self.sector(i).age

    def fixed_dim(self, i: int) -> int:
        return self.sector(i).fixed_dim

    def virtual_shift(self, i: int) -> int:
        return self.sector(i).virtual_shift

    def cr_shift(self, i: int) -> Fraction:
        return self.sector(i).cr_shift

    def trace(self, i: int) -> CyclotomicNumber:
        value = self._traces.get(i)
        if value is None:
            value = self.table.elements[i].trace()
            self._traces[i] = value
        return value

    def fixed_dim_of_subgroup(self, members: Sequence[int]) -> int:
        """Dimension of the common fixed subspace of a subgroup.

        The averaging projector (1/|H|) sum of rho(k) has trace equal to the
        fixed-space dimension; the cyclotomic sum must come out a rational
        integer in [0, n], which is asserted at runtime.
        """
        if self.forget:
            return 0
        total = CyclotomicNumber.zero()
        for k in members:
            total = total + self.trace(k)
        average = total * Fraction(1, len(members))
        value = average.as_rational()
        if value is None or value.denominator != 1 or not 0 <= value <= self.n:
            raise ConsistencyError(
                f"projector average over subgroup {tuple(members)} is {value!r}, "
                f"expected an integer in [0, {self.n}]"
            )
        return int(value)

    def fixed_dim_pair(self, g: int, h: int) -> int:
        """dim of V^g intersect V^h: the fixed space of the subgroup <g, h>."""
        if self.forget:
            return 0
        key = (g, h) if g <= h else (h, g)
        value = self._pairs.get(key)
        if value is None:
            value = self.fixed_dim_of_subgroup(self.table.subgroup_closure((g, h)))
            self._pairs[key] = value
        return value
