import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hiveforge.errors import DomainError
from hiveforge.rootsys import (
    LieType,
    conjugate,
    dimension,
    dominant_representative,
    dominant_weights_below,
    dynkin_from_partition,
    is_in_root_lattice,
    partition_from_dynkin,
    root_system,
    weyl_orbit,
    weyl_vector,
)

POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A4": 10, "A6": 21,
    "B2": 4, "B3": 9, "C3": 9,
    "D4": 12, "D5": 20,
    "E6": 36, "E7": 63, "E8": 120,
    "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


def test_simple_roots_are_cartan_rows():
    rs = root_system("B3")
    for i in range(rs.rank):
        coords = [0] * rs.rank
        coords[i] = 1
        assert rs.simple_root_expansion[rs.cartan[i]] == tuple(coords)


def test_lie_type_validation():
    assert str(LieType.parse("a4")) == "A4"
    for bad in ("E5", "F3", "G3", "B1", "D2", "H4"):
        with pytest.raises(DomainError):
            LieType.parse(bad)


def test_weyl_vector():
    assert weyl_vector(root_system("A4")) == (1, 1, 1, 1)
    assert weyl_vector(root_system("A1")) == (1,)
    assert weyl_vector(root_system("G2")) == (1, 1)


def test_dimension_paper_values():
    rs = root_system("A4")
    assert dimension(rs, (3, 4, 3, 5)) == 5001750
    assert dimension(rs, (4, 3, 5, 4)) == 9281250
    assert dimension(rs, (0, 0, 0, 0)) == 1
    assert dimension(rs, (1, 0, 0, 1)) == 24


def su5_dimension_product(lam):
    """Independent closed-form product for SU(5) dimensions."""
    l1, l2, l3, l4 = lam
    return (
        (1 + l1) * (1 + l2) * (1 + l3) * (1 + l4)
        * (2 + l1 + l2) * (2 + l2 + l3) * (2 + l3 + l4)
        * (3 + l1 + l2 + l3) * (3 + l2 + l3 + l4)
        * (4 + l1 + l2 + l3 + l4)
    ) // 288


def test_dimension_against_su5_product_formula():
    rs = root_system("A4")
    rng = random.Random(11)
    for _ in range(100):
        lam = tuple(rng.randint(0, 6) for _ in range(4))
        assert dimension(rs, lam) == su5_dimension_product(lam)


def test_dimension_rejects_non_dominant():
    with pytest.raises(DomainError):
        dimension(root_system("A4"), (1, -1, 0, 0))


def test_root_lattice_membership():
    rs = root_system("A4")
    assert is_in_root_lattice(rs, (5, 5, 4, 7))
    assert is_in_root_lattice(rs, (0, 0, 0, 0))
    assert not is_in_root_lattice(root_system("A1"), (1,))


def test_conjugate():
    rs = root_system("A4")
    assert conjugate(rs, (4, 3, 5, 4)) == (4, 5, 3, 4)
    assert conjugate(rs, (1, 1, 1, 1)) == (1, 1, 1, 1)
    assert conjugate(rs, (2, 2, 4, 2)) == (2, 4, 2, 2)
    assert conjugate(root_system("B3"), (1, 2, 3)) == (1, 2, 3)
    assert conjugate(root_system("D5"), (1, 2, 3, 4, 5)) == (1, 2, 3, 5, 4)
    assert conjugate(root_system("E6"), (1, 2, 3, 4, 5, 6)) == (5, 4, 3, 2, 1, 6)


def test_weyl_orbit():
    assert weyl_orbit(root_system("A1"), (2,)) == {(2,), (-2,)}
    assert len(weyl_orbit(root_system("A2"), (1, 1))) == 6
    assert weyl_orbit(root_system("A4"), (0, 0, 0, 0)) == {(0, 0, 0, 0)}


def test_dominant_weights_below():
    a2 = root_system("A2")
    assert dominant_weights_below(a2, (1, 1)) == {(1, 1), (0, 0)}
    a4 = root_system("A4")
    assert dominant_weights_below(a4, (0, 0, 0, 0)) == {(0, 0, 0, 0)}
    assert dominant_weights_below(a4, (0, 1, 1, 0)) == {(0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 0, 0)}


def test_partition_roundtrip():
    assert partition_from_dynkin((1, 0, 0, 1)) == (2, 1, 1, 1, 0)
    assert dynkin_from_partition((2, 1, 1, 1, 0)) == (1, 0, 0, 1)


small_a_weights = st.tuples(*[st.integers(0, 4)] * 4)


@given(small_a_weights)
@settings(max_examples=60, deadline=None)
def test_dimension_conjugation_symmetry(lam):
    rs = root_system("A4")
    assert dimension(rs, lam) == dimension(rs, conjugate(rs, lam))


@given(st.sampled_from(["A2", "A3", "B2", "G2"]), st.data())
@settings(max_examples=40, deadline=None)
def test_orbit_size_divides_weyl_order(name, data):
    rs = root_system(name)
    lam = tuple(data.draw(st.integers(0, 3)) for _ in range(rs.rank))
    size = len(weyl_orbit(rs, lam))
    assert rs.weyl_group_order() % size == 0
    if all(c >= 1 for c in lam):
        assert size == rs.weyl_group_order()


@given(st.sampled_from(["A3", "B2", "G2", "C3"]), st.data())
@settings(max_examples=30, deadline=None)
def test_below_weights_stay_in_root_lattice_offset(name, data):
    rs = root_system(name)
    lam = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    for mu in dominant_weights_below(rs, lam):
        diff = tuple(a - b for a, b in zip(lam, mu))
        assert is_in_root_lattice(rs, diff)


def test_dominant_representative():
    rs = root_system("A2")
    assert dominant_representative(rs, (-1, 2)) in weyl_orbit(rs, dominant_representative(rs, (-1, 2)))
    assert dominant_representative(rs, (1, 1)) == (1, 1)
