from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbring import (
    CyclotomicNumber,
    GroupTable,
    InputError,
    MonomialMap,
    RationalPhase,
    ResourceCapError,
)
from support import corpus_model


def zp(num, den=1):
    return RationalPhase(num, den)


def diag(*phases):
    return MonomialMap(tuple(range(len(phases))), tuple(phases))


Z3_GEN = diag(zp(1, 3), zp(1, 3))
QUAT_I = diag(zp(1, 4), zp(3, 4))
QUAT_J = MonomialMap((1, 0), (zp(1, 2), zp(0)))
S3_GENS = [
    MonomialMap((1, 0, 2), (zp(0),) * 3),
    MonomialMap((1, 2, 0), (zp(0),) * 3),
]


@st.composite
def monomial_maps(draw, dimension=None):
    n = dimension if dimension is not None else draw(st.integers(min_value=1, max_value=4))
    perm = tuple(draw(st.permutations(range(n))))
    phases = tuple(
        draw(
            st.builds(
                RationalPhase,
                numerator=st.integers(min_value=0, max_value=11),
                denominator=st.integers(min_value=1, max_value=6),
            )
        )
        for _ in range(n)
    )
    return MonomialMap(perm, phases)


# --- composition, inverse, dual ---

def test_identity_is_neutral():
    e = MonomialMap.identity(2)
    assert e * Z3_GEN == Z3_GEN
    assert Z3_GEN * e == Z3_GEN


def test_compose_adds_diagonal_phases():
    assert Z3_GEN * Z3_GEN == diag(zp(2, 3), zp(2, 3))


def test_quaternion_j_squares_to_minus_identity():
    assert QUAT_J * QUAT_J == diag(zp(1, 2), zp(1, 2))


def test_inverse_examples():
    assert MonomialMap.identity(3).inverse() == MonomialMap.identity(3)
    assert Z3_GEN.inverse() == diag(zp(2, 3), zp(2, 3))


@given(monomial_maps(dimension=3), monomial_maps(dimension=3))
@settings(max_examples=60)
def test_inverse_antihomomorphism(a, b):
    assert (a * b).inverse() == b.inverse() * a.inverse()


@given(monomial_maps())
def test_inverse_cancels(a):
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()


def test_dual_fixes_real_maps():
    real = MonomialMap((1, 0), (zp(1, 2), zp(0)))
    assert real.dual() == real


def test_dual_negates_phases():
    assert Z3_GEN.dual() == diag(zp(2, 3), zp(2, 3))


@given(monomial_maps(dimension=3), monomial_maps(dimension=3))
@settings(max_examples=60)
def test_dual_is_homomorphism_and_involution(a, b):
    assert (a * b).dual() == a.dual() * b.dual()
    assert a.dual().dual() == a


def test_double_blocks_map_and_dual():
    doubled = Z3_GEN.double()
    assert doubled.perm == (0, 1, 2, 3)
    assert doubled.phases == (zp(1, 3), zp(1, 3), zp(2, 3), zp(2, 3))
    # permutation representations are self-dual
    tau = S3_GENS[0]
    assert tau.double() == MonomialMap((1, 0, 2, 4, 3, 5), (zp(0),) * 6)


def test_compose_dimension_mismatch():
    with pytest.raises(InputError):
        Z3_GEN * MonomialMap.identity(3)


def test_invalid_permutation_rejected():
    with pytest.raises(InputError):
        MonomialMap((0, 0), (zp(0), zp(0)))
    with pytest.raises(InputError):
        MonomialMap((0, 1), (zp(0),))


def test_zero_dimensional_identity():
    e = MonomialMap.identity(0)
    assert e.is_identity()
    assert e.trace() == 0


# --- traces ---

def test_trace_examples():
    assert MonomialMap.identity(3).trace() == 3
    assert Z3_GEN.trace() == CyclotomicNumber.from_phase(zp(1, 3)) * 2
    assert S3_GENS[0].trace() == 1  # one fixed coordinate


def test_trace_is_class_function():
    model = corpus_model("q8")
    table = model.table
    for g in range(table.order):
        for k in range(table.order):
            assert table.elements[table.conjugate(g, k)].trace() == table.elements[g].trace()


# --- closure ---

def test_closure_cyclic():
    table = GroupTable.close([Z3_GEN], 2)
    assert table.order == 3


def test_closure_s3():
    table = GroupTable.close(S3_GENS, 3)
    assert table.order == 6


def test_closure_quaternion():
    table = GroupTable.close([QUAT_I, QUAT_J], 2)
    assert table.order == 8


def test_closure_z2z2():
    gens = [diag(zp(1, 2), zp(0)), diag(zp(0), zp(1, 2))]
    assert GroupTable.close(gens, 2).order == 4


def test_closure_trivial():
    table = GroupTable.close([], 2)
    assert table.order == 1
    assert table.elements[0].is_identity()


def test_closure_respects_order_cap():
    with pytest.raises(ResourceCapError):
        GroupTable.close([Z3_GEN], 2, cap=2)


def test_closure_respects_conductor_cap():
    huge = diag(zp(1, 5000))
    with pytest.raises(ResourceCapError):
        GroupTable.close([huge], 1)


def test_identity_sits_at_index_zero():
    table = GroupTable.close(S3_GENS, 3)
    assert table.elements[0].is_identity()
    for i in range(table.order):
        assert table.mult(i, table.inverse_index[i]) == 0
        assert table.mult(table.inverse_index[i], i) == 0


@pytest.mark.parametrize("name", ["s3-perm", "q8", "z4-13"])
def test_mult_table_matches_composition(name):
    table = corpus_model(name).table
    for i in range(table.order):
        for j in range(table.order):
            assert table.elements[table.mult(i, j)] == table.elements[i] * table.elements[j]


def test_lazy_mult_path_matches_eager(monkeypatch):
    eager = GroupTable.close(S3_GENS, 3)
    monkeypatch.setattr(GroupTable, "EAGER_TABLE_LIMIT", 1)
    lazy = GroupTable.close(S3_GENS, 3)
    assert lazy._mult_rows is None
    for i in range(6):
        for j in range(6):
            assert lazy.mult(i, j) == eager.mult(i, j)


def test_element_orders():
    table = GroupTable.close([Z3_GEN], 2)
    assert table.element_order(0) == 1
    assert table.element_order(1) == 3
    q8 = GroupTable.close([QUAT_I, QUAT_J], 2)
    minus_one = q8.index[diag(zp(1, 2), zp(1, 2))]
    assert q8.element_order(minus_one) == 2


@pytest.mark.parametrize("name", ["s3-perm", "q8", "s4-perm", "z2z2-diag"])
def test_lagrange(name):
    table = corpus_model(name).table
    for i in range(table.order):
        assert table.order % table.element_order(i) == 0


# --- conjugacy classes ---

def test_abelian_classes_are_singletons():
    table = corpus_model("z4-13").table
    part = table.conjugacy_classes()
    assert all(len(c) == 1 for c in part.classes)


def test_s3_class_sizes():
    part = corpus_model("s3-perm").table.conjugacy_classes()
    assert sorted(len(c) for c in part.classes) == [1, 2, 3]
    # brute-force cross-check straight from the definition
    table = corpus_model("s3-perm").table
    for cls in part.classes:
        for g in cls:
            orbit = {table.conjugate(g, k) for k in range(table.order)}
            assert orbit == set(cls)


def test_q8_class_sizes():
    part = corpus_model("q8").table.conjugacy_classes()
    assert sorted(len(c) for c in part.classes) == [1, 1, 2, 2, 2]


def test_partition_covers_everything():
    table = corpus_model("s4-perm").table
    part = table.conjugacy_classes()
    seen = sorted(i for cls in part.classes for i in cls)
    assert seen == list(range(table.order))
    for cls, rep in zip(part.classes, part.representatives):
        assert rep == min(cls)
        for member in cls:
            assert part.class_of[member] == part.class_of[rep]


# --- subgroup closure ---

def test_subgroup_closure_identity():
    table = corpus_model("s3-perm").table
    assert table.subgroup_closure([0]) == (0,)


def test_subgroup_closure_two_transpositions_generate_s3():
    table = corpus_model("s3-perm").table
    transpositions = [
        i for i in range(table.order) if table.element_order(i) == 2
    ]
    assert len(transpositions) == 3
    assert len(table.subgroup_closure(transpositions[:2])) == 6


def test_subgroup_closure_cyclic():
    table = GroupTable.close([Z3_GEN], 2)
    assert table.subgroup_closure([1]) == (0, 1, 2)


def test_subgroup_closure_is_closed_under_mult_and_inv():
    table = corpus_model("s4-perm").table
    sub = set(table.subgroup_closure([1, 5]))
    for a in sub:
        assert table.inverse_index[a] in sub
        for b in sub:
            assert table.mult(a, b) in sub


# --- doubling as a group map ---

@pytest.mark.parametrize("name", ["z3-11", "s3-perm", "q8"])
def test_doubling_is_bijective_homomorphism(name):
    model = corpus_model(name)
    table = model.table
    doubled = GroupTable.close(
        [g.double() for g in model.spec.generators], 2 * model.spec.dimension
    )
    assert doubled.order == table.order
    mapping = [doubled.index[e.double()] for e in table.elements]
    assert len(set(mapping)) == table.order
    for i in range(table.order):
        for j in range(table.order):
            assert mapping[table.mult(i, j)] == doubled.mult(mapping[i], mapping[j])


def test_doubling_preserves_conjugacy_classes():
    model = corpus_model("s3-perm")
    table = model.table
    doubled = GroupTable.close(
        [g.double() for g in model.spec.generators], 2 * model.spec.dimension
    )
    mapping = [doubled.index[e.double()] for e in table.elements]
    part = table.conjugacy_classes()
    dpart = doubled.conjugacy_classes()
    assert len(part) == len(dpart)
    for cls in part.classes:
        images = {mapping[g] for g in cls}
        assert images in [set(c) for c in dpart.classes]


def test_closure_is_deterministic():
    first = GroupTable.close(S3_GENS, 3)
    second = GroupTable.close(list(reversed(S3_GENS)), 3)
    assert first.elements == second.elements
    assert first.inverse_index == second.inverse_index
    assert first.gens == second.gens
