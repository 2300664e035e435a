"""Graded sector algebras for the two exact product rules on a linear orbifold.

Fixed loci of a linear action are linear subspaces, hence contractible, so
every sector contributes a single generator.  Two gates decide each product:
the Euler class of a positive-rank bundle over a contractible base vanishes
(rank gate), and the wrong-way map into a strictly larger fixed subspace
raises cohomological degree out of a contractible space (codimension gate).
Structure constants are therefore 0 or 1 at sector level; class-level
constants of the conjugation-invariant subring are nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ConsistencyError, InputError
from .monomial import GroupTable
from .orbifold import OrbifoldSpec, cotangent_double
from .sectors import SectorData, SectorGeometry

__all__ = [
    "CR",
    "VIRT",
    "THEORIES",
    "AlgebraReport",
    "AxiomCheck",
    "InvariantRing",
    "OrbifoldModel",
    "SectorAlgebra",
    "build_algebra",
    "verify_algebra",
]

CR = "cr"
VIRT = "virt"
THEORIES = (CR, VIRT)


def _check_theory(theory: str) -> None:
    if theory not in THEORIES:
        raise InputError(f"theory must be one of {THEORIES}, got {theory!r}")


class OrbifoldModel:
    """One linear quotient orbifold, closed and measured.

    Bundles the closed group table, the exact sector geometry, the bundle
    ranks for every pair of sectors, and the two sector algebras.
    """

    def __init__(self, spec: OrbifoldSpec, *, forget_geometry: bool = False):
        self.spec = spec
        self.forget_geometry = forget_geometry
        self.table = spec.close()
        self.geometry = SectorGeometry(self.table, spec.dimension, forget=forget_geometry)
        self._labels: Optional[tuple[str, ...]] = None
        self._algebras: dict[str, SectorAlgebra] = {}
        self._cotangent: Optional["OrbifoldModel"] = None

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def n(self) -> int:
        return self.geometry.n

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            self._labels = tuple(
                "e" if i == 0 else f"g{i}" for i in range(self.order)
            )
        return self._labels

    def label(self, i: int) -> str:
        return self.labels[i]

    def sector(self, i: int) -> SectorData:
        return self.geometry.sector(i)

    def age(self, i: int) -> Fraction:
        return self.geometry.age(i)

    def fixed_dim(self, i: int) -> int:
        return self.geometry.fixed_dim(i)

    def virtual_shift(self, i: int) -> int:
        return self.geometry.virtual_shift(i)

    def cr_shift(self, i: int) -> Fraction:
        return self.geometry.cr_shift(i)

    def fixed_dim_pair(self, g: int, h: int) -> int:
        return self.geometry.fixed_dim_pair(g, h)

    def _as_bundle_rank(self, value: Fraction, kind: str, g: int, h: int) -> int:
        value = Fraction(value)
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(
                f"{kind} rank at ({self.label(g)}, {self.label(h)}) is {value}, "
                "expected a nonnegative integer"
            )
        return int(value)

    def obstruction_rank(self, g: int, h: int) -> int:
        """Rank of the correction bundle gating the cr product at (g, h)."""
        gh = self.table.mult(g, h)
        value = (
            self.age(g)
            + self.age(h)
            - self.age(gh)
            - self.fixed_dim(gh)
            + self.fixed_dim_pair(g, h)
        )
        return self._as_bundle_rank(value, "obstruction", g, h)

    def obstruction_rank_dual_form(self, g: int, h: int) -> int:
        """Triple-age form of the same rank; an independent cross-check."""
        gh_inv = self.table.inverse_index[self.table.mult(g, h)]
        value = (
            self.age(g)
            + self.age(h)
            + self.age(gh_inv)
            - (self.n - self.fixed_dim_pair(g, h))
        )
        return self._as_bundle_rank(value, "obstruction (dual form)", g, h)

    def excess_rank(self, g: int, h: int) -> int:
        """Rank of the excess bundle of V^g and V^h inside the ambient space.

        Zero exactly when the two fixed subspaces meet transversally.
        """
        value = (
            self.n
            - self.fixed_dim(g)
            - self.fixed_dim(h)
            + self.fixed_dim_pair(g, h)
        )
        return self._as_bundle_rank(Fraction(value), "excess", g, h)

    def structure_constant(self, theory: str, g: int, h: int) -> int:
        """Coefficient of x_{gh} in x_g * x_h: 1 iff both gates pass, else 0."""
        _check_theory(theory)
        rank = self.obstruction_rank(g, h) if theory == CR else self.excess_rank(g, h)
        if rank != 0:
            return 0
        gh = self.table.mult(g, h)
        return 1 if self.fixed_dim_pair(g, h) == self.fixed_dim(gh) else 0

    def algebra(self, theory: str) -> "SectorAlgebra":
        _check_theory(theory)
        alg = self._algebras.get(theory)
        if alg is None:
            order = self.order
            if theory == CR:
                degrees = tuple(self.cr_shift(i) for i in range(order))
            else:
                degrees = tuple(Fraction(self.virtual_shift(i)) for i in range(order))
            constants = tuple(
                tuple(Fraction(self.structure_constant(theory, g, h)) for h in range(order))
                for g in range(order)
            )
            alg = SectorAlgebra(
                theory=theory,
                table=self.table,
                degrees=degrees,
                constants=constants,
                labels=self.labels,
            )
            self._algebras[theory] = alg
        return alg

    def cotangent_model(self) -> "OrbifoldModel":
        """Model of the doubled orbifold, in the same geometry mode."""
        if self._cotangent is None:
            self._cotangent = OrbifoldModel(
                cotangent_double(self.spec), forget_geometry=self.forget_geometry
            )
        return self._cotangent


def build_algebra(
    spec: OrbifoldSpec, theory: str, *, forget_geometry: bool = False
) -> "SectorAlgebra":
    """Close the spec's group and build the requested sector algebra."""
    return OrbifoldModel(spec, forget_geometry=forget_geometry).algebra(theory)


@dataclass(frozen=True, eq=False)
class SectorAlgebra:
    """Group-graded algebra on one generator x_g per sector.

    Carries the degree map, the 0/1 structure constants, the normalized sector
    pairing, and the conjugation action (through the group table).

    Two bilinear forms appear on this algebra.  The *sector pairing* couples
    x_g to x_{g^-1} with value 1: sectors are contractible, so there is no
    canonical volume to integrate against, and this is the normalization that
    makes the identity sector self-paired to 1.  The *trace form* is
    eps(a * b), where eps reads off the identity-sector coefficient; it is the
    form whose compatibility with the product is checked by verify_algebra.
    """

    theory: str
    table: GroupTable = field(repr=False)
    degrees: tuple[Fraction, ...]
    constants: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.degrees)

    def constant(self, g: int, h: int) -> Fraction:
        return self.constants[g][h]

    def product_index(self, g: int, h: int) -> int:
        return self.table.mult(g, h)

    def pairing(self, g: int, h: int) -> Fraction:
        """Normalized sector pairing: 1 on (g, g^-1), else 0."""
        return Fraction(1) if self.table.inverse_index[g] == h else Fraction(0)

    def trace_form(self, g: int, h: int) -> Fraction:
        """eps(x_g * x_h) where eps extracts the identity-sector coefficient."""
        if self.table.mult(g, h) == 0:
            return self.constants[g][h]
        return Fraction(0)

    def conjugated(self, k: int, g: int) -> int:
        """Index of k^-1 g k; the conjugation action on the basis."""
        return self.table.conjugate(g, k)

    def with_constant(self, g: int, h: int, value) -> "SectorAlgebra":
        """Copy of the algebra with one table entry replaced (for negative tests)."""
        rows = [list(row) for row in self.constants]
        rows[g][h] = Fraction(value)
        return SectorAlgebra(
            theory=self.theory,
            table=self.table,
            degrees=self.degrees,
            constants=tuple(tuple(row) for row in rows),
            labels=self.labels,
        )

    def invariant_ring(self) -> "InvariantRing":
        """Expand products of class sums and regroup them by conjugacy class."""
        part = self.table.conjugacy_classes()
        degrees = []
        for cls in part.classes:
            values = {self.degrees[i] for i in cls}
            if len(values) != 1:
                raise ConsistencyError(
                    f"degree is not constant on class {cls}: {sorted(values)}"
                )
            degrees.append(values.pop())
        order = self.order
        constants: dict[tuple[int, int, int], Fraction] = {}
        for a, class_a in enumerate(part.classes):
            for b, class_b in enumerate(part.classes):
                acc = [Fraction(0)] * order
                for g in class_a:
                    row = self.constants[g]
                    for h in class_b:
                        c = row[h]
                        if c:
                            acc[self.table.mult(g, h)] += c
                for cid, cls in enumerate(part.classes):
                    values = {acc[k] for k in cls}
                    if len(values) != 1:
                        raise ConsistencyError(
                            f"class sum product y[{a}]*y[{b}] is not class-constant "
                            f"on class {cid}: {sorted(values)}"
                        )
                    value = values.pop()
                    if value:
                        constants[(a, b, cid)] = value
        return InvariantRing(
            theory=self.theory,
            labels=tuple(f"[{self.labels[r]}]" for r in part.representatives),
            class_sizes=tuple(len(c) for c in part.classes),
            degrees=tuple(degrees),
            constants=constants,
        )

    def to_json_dict(self) -> dict:
        entries = []
        for g in range(self.order):
            for h in range(self.order):
                c = self.constants[g][h]
                if c:
                    entries.append([g, h, self.table.mult(g, h), str(c)])
        return {
            "theory": self.theory,
            "basis": list(self.labels),
            "degrees": [str(d) for d in self.degrees],
            "constants": entries,
        }

    def to_text(self) -> str:
        width = max(max(len(s) for s in self.labels), len("sector"))
        cell = max(len(s) for s in self.labels)
        lines = [f"theory {self.theory}, {self.order} sectors"]
        lines.append(f"{'sector':<{width}}  degree")
        for label, deg in zip(self.labels, self.degrees):
            lines.append(f"{label:<{width}}  {deg}")
        lines.append("")
        lines.append("constants (row * column lands in the product sector):")
        header = " " * (width + 2) + "  ".join(f"{s:>{cell}}" for s in self.labels)
        lines.append(header)
        for g in range(self.order):
            row = "  ".join(f"{str(self.constants[g][h]):>{cell}}" for h in range(self.order))
            lines.append(f"{self.labels[g]:<{width}}  {row}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class InvariantRing:
    """The conjugation-invariant subring on the class-sum basis."""

    theory: str
    labels: tuple[str, ...]
    class_sizes: tuple[int, ...]
    degrees: tuple[Fraction, ...]
    constants: dict[tuple[int, int, int], Fraction]

    @property
    def order(self) -> int:
        return len(self.labels)

    def constant(self, a: int, b: int, c: int) -> Fraction:
        return self.constants.get((a, b, c), Fraction(0))

    def to_json_dict(self) -> dict:
        entries = [
            [a, b, c, str(v)] for (a, b, c), v in sorted(self.constants.items())
        ]
        return {
            "theory": self.theory,
            "basis": list(self.labels),
            "degrees": [str(d) for d in self.degrees],
            "constants": entries,
        }

    def to_text(self) -> str:
        width = max(max(len(s) for s in self.labels), len("class"))
        lines = [f"theory {self.theory}, {self.order} classes"]
        lines.append(f"{'class':<{width}}  size  degree")
        for label, size, deg in zip(self.labels, self.class_sizes, self.degrees):
            lines.append(f"{label:<{width}}  {size:<4}  {deg}")
        lines.append("")
        lines.append("products of class sums:")
        for a in range(self.order):
            for b in range(self.order):
                terms = [
                    (c, v)
                    for (xa, xb, c), v in sorted(self.constants.items())
                    if xa == a and xb == b
                ]
                if terms:
                    rhs = " + ".join(
                        f"y{self.labels[c]}" if v == 1 else f"{v}*y{self.labels[c]}"
                        for c, v in terms
                    )
                else:
                    rhs = "0"
                lines.append(f"y{self.labels[a]:<{width}} * y{self.labels[b]:<{width}} = {rhs}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    counterexample: Optional[dict] = None


@dataclass(frozen=True)
class AlgebraReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[AxiomCheck]:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def verify_algebra(alg: SectorAlgebra) -> AlgebraReport:
    """Exhaustively check the algebra axioms over the whole basis.

    Checks associativity, grading, unit laws, Frobenius compatibility of the
    trace form, nondegeneracy of the sector pairing, and equivariance of the
    constants under simultaneous conjugation.  Failures are reported with the
    first counterexample, never raised.
    """
    checks = (
        _check_associativity(alg),
        _check_grading(alg),
        _check_unit(alg),
        _check_frobenius(alg),
        _check_nondegeneracy(alg),
        _check_equivariance(alg),
    )
    return AlgebraReport(checks)


def _triple_payload(alg: SectorAlgebra, g: int, h: int, k: int, lhs, rhs) -> dict:
    return {
        "triple": [alg.labels[g], alg.labels[h], alg.labels[k]],
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def _check_associativity(alg: SectorAlgebra) -> AxiomCheck:
    order = alg.order
    mult = alg.table.mult
    c = alg.constants
    for g in range(order):
        for h in range(order):
            gh = mult(g, h)
            c_gh = c[g][h]
            for k in range(order):
                lhs = c_gh * c[gh][k]
                rhs = c[h][k] * c[g][mult(h, k)]
                if lhs != rhs:
                    return AxiomCheck(
                        "associativity", False, _triple_payload(alg, g, h, k, lhs, rhs)
                    )
    return AxiomCheck("associativity", True)


def _check_grading(alg: SectorAlgebra) -> AxiomCheck:
    order = alg.order
    for g in range(order):
        for h in range(order):
            if alg.constants[g][h]:
                gh = alg.table.mult(g, h)
                if alg.degrees[g] + alg.degrees[h] != alg.degrees[gh]:
                    return AxiomCheck(
                        "grading",
                        False,
                        {
                            "pair": [alg.labels[g], alg.labels[h]],
                            "degree_sum": str(alg.degrees[g] + alg.degrees[h]),
                            "product_degree": str(alg.degrees[gh]),
                        },
                    )
    return AxiomCheck("grading", True)


def _check_unit(alg: SectorAlgebra) -> AxiomCheck:
    for h in range(alg.order):
        if alg.constants[0][h] != 1 or alg.constants[h][0] != 1:
            return AxiomCheck(
                "unit",
                False,
                {
                    "sector": alg.labels[h],
                    "left": str(alg.constants[0][h]),
                    "right": str(alg.constants[h][0]),
                },
            )
    return AxiomCheck("unit", True)


def _check_frobenius(alg: SectorAlgebra) -> AxiomCheck:
    """Trace-form compatibility: <a*b, c> equals <a, b*c> for all basis triples."""
    order = alg.order
    mult = alg.table.mult
    for g in range(order):
        for h in range(order):
            gh = mult(g, h)
            c_gh = alg.constants[g][h]
            for k in range(order):
                lhs = c_gh * alg.trace_form(gh, k)
                rhs = alg.trace_form(g, mult(h, k)) * alg.constants[h][k]
                if lhs != rhs:
                    return AxiomCheck(
                        "frobenius", False, _triple_payload(alg, g, h, k, lhs, rhs)
                    )
    return AxiomCheck("frobenius", True)


def _check_nondegeneracy(alg: SectorAlgebra) -> AxiomCheck:
    for g in range(alg.order):
        partners = [h for h in range(alg.order) if alg.pairing(g, h)]
        if partners != [alg.table.inverse_index[g]] or alg.pairing(g, partners[0]) != 1:
            return AxiomCheck(
                "nondegeneracy",
                False,
                {"sector": alg.labels[g], "partners": [alg.labels[h] for h in partners]},
            )
    return AxiomCheck("nondegeneracy", True)


def _check_equivariance(alg: SectorAlgebra) -> AxiomCheck:
    order = alg.order
    for k in range(order):
        conj = alg.table.conjugation_permutation(k)
        for g in range(order):
            row = alg.constants[g]
            conj_row = alg.constants[conj[g]]
            for h in range(order):
                if conj_row[conj[h]] != row[h]:
                    return AxiomCheck(
                        "equivariance",
                        False,
                        {
                            "pair": [alg.labels[g], alg.labels[h]],
                            "conjugator": alg.labels[k],
                            "original": str(row[h]),
                            "conjugated": str(conj_row[conj[h]]),
                        },
                    )
    return AxiomCheck("equivariance", True)
