"""Shared fixtures-in-spirit: corpus loading, cached models, independent oracles."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from orbring import OrbifoldModel, OrbifoldSpec

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

CORPUS_NAMES = sorted(p.stem for p in CORPUS.glob("*.json"))
SMALL_NAMES = [n for n in CORPUS_NAMES if n != "s4-perm"]  # quick loops in unit tests

_specs: dict[str, OrbifoldSpec] = {}
_models: dict[tuple[str, bool], OrbifoldModel] = {}


def corpus_path(name: str) -> Path:
    return CORPUS / f"{name}.json"


def corpus_spec(name: str) -> OrbifoldSpec:
    if name not in _specs:
        _specs[name] = OrbifoldSpec.load(corpus_path(name))
    return _specs[name]


def corpus_model(name: str, forget: bool = False) -> OrbifoldModel:
    key = (name, forget)
    if key not in _models:
        _models[key] = OrbifoldModel(corpus_spec(name), forget_geometry=forget)
    return _models[key]


# --- independent polynomial oracle (rational arithmetic, no package code) ---

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div_exact(num, den):
    """Divide exactly over the rationals; raises if a remainder survives."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    dd = len(den) - 1
    q = [Fraction(0)] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / den[dd]
        q[k - dd] = c
        for i in range(dd + 1):
            num[k - dd + i] -= c * den[i]
    assert not any(num[:dd]), f"nonzero remainder {num[:dd]}"
    return q


def x_power_minus_one(n):
    out = [0] * (n + 1)
    out[0], out[n] = -1, 1
    return out


# --- independent group-ring convolution oracle for class-sum products ---

def class_convolution_oracle(table):
    """Class-sum multiplication coefficients of the group ring, by brute force.

    Returns {(a, b, c): count} where count is the coefficient of any fixed
    element of class c in the product of the class sums of classes a and b.
    """
    part = table.conjugacy_classes()
    coeffs = {}
    for a, class_a in enumerate(part.classes):
        for b, class_b in enumerate(part.classes):
            acc = [0] * table.order
            for g in class_a:
                for h in class_b:
                    acc[table.mult(g, h)] += 1
            for c, cls in enumerate(part.classes):
                values = {acc[k] for k in cls}
                assert len(values) == 1, "class convolution is not class-constant"
                value = values.pop()
                if value:
                    coeffs[(a, b, c)] = Fraction(value)
    return coeffs


# --- independent sector-level expansion oracle for invariant rings ---

def invariant_expansion_oracle(alg):
    """Expand class-sum products directly through the sector constants."""
    part = alg.table.conjugacy_classes()
    coeffs = {}
    for a, class_a in enumerate(part.classes):
        for b, class_b in enumerate(part.classes):
            acc = [Fraction(0)] * alg.order
            for g in class_a:
                for h in class_b:
                    acc[alg.table.mult(g, h)] += alg.constant(g, h)
            for c, cls in enumerate(part.classes):
                values = {acc[k] for k in cls}
                assert len(values) == 1
                value = values.pop()
                if value:
                    coeffs[(a, b, c)] = value
    return coeffs
