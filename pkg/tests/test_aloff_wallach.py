from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awspec.aloff_wallach import (
    EigenPair,
    NotSphericalError,
    SphericalTriple,
    dim_so3,
    dim_su3,
    eigen_pair,
    eigenvalue_at,
    first_triples,
    is_s1_spherical,
    iter_spherical,
    multiplicity_m,
    partition,
)


def test_partition_basics():
    assert partition(0, 0) == 1
    assert partition(1, 0) == 0
    assert partition(-3, 0) == 0
    assert partition(3, 0) == 2
    assert partition(3, -1) == 2
    assert partition(3, -2) == 1
    assert partition(3, -3) == 0


@given(st.integers(0, 30), st.integers(-100, 100))
def test_partition_increases_with_a2(q, a2):
    assert partition(3 * q, a2) <= partition(3 * q, a2 + 1) <= q + 1


def test_small_multiplicities():
    assert multiplicity_m(0, 0, 0) == 1
    assert multiplicity_m(2, 1, 0) == multiplicity_m(2, 1, 1) == 1
    assert multiplicity_m(3, 0, 0) == 0
    assert multiplicity_m(3, 0, 1) == 1
    assert multiplicity_m(1, 0, 0) == 0


@given(st.integers(0, 40), st.integers(0, 40), st.integers(0, 20))
def test_multiplicity_is_zero_or_one(a, b, z3):
    z1, z2 = max(a, b), min(a, b)
    m = multiplicity_m(z1, z2, z3)
    assert m in (0, 1)
    if m:
        assert is_s1_spherical(z1, z2)
        assert 3 * z3 <= z1 + z2


@given(st.integers(0, 40), st.integers(0, 40), st.integers(0, 20))
def test_dual_symmetry(a, b, z3):
    # rho(z1, z2) and rho(z1, z1 - z2) are dual representations
    z1, z2 = max(a, b), min(a, b)
    assert multiplicity_m(z1, z2, z3) == multiplicity_m(z1, z1 - z2, z3)


def test_domain_errors():
    with pytest.raises(ValueError):
        multiplicity_m(1, 2, 0)
    with pytest.raises(ValueError):
        multiplicity_m(2, 1, -1)
    with pytest.raises(ValueError):
        dim_so3(-1)


def test_dimensions():
    assert dim_su3(0, 0) == 1
    assert dim_su3(1, 0) == dim_su3(1, 1) == 3
    assert dim_su3(2, 1) == 8
    assert dim_su3(3, 0) == 10
    assert dim_so3(2) == 5


def test_eigen_pairs():
    assert eigen_pair(2, 1, 1) == EigenPair(4, 8)
    assert eigen_pair(8, 4, 4) == EigenPair(16, 80)
    assert eigen_pair(12, 6, 3) == EigenPair(144, 48)
    with pytest.raises(NotSphericalError):
        eigen_pair(3, 0, 0)


def test_eigenvalue_at():
    assert eigenvalue_at(2, 1, 1, Fraction(1, 2), 1) == 16
    with pytest.raises(ValueError):
        eigenvalue_at(2, 1, 1, 0, 1)


def test_spherical_triple():
    t = SphericalTriple.of(8, 4, 4)
    assert (t.m, t.dim_su3, t.dim_so3, t.total_mult) == (1, 125, 9, 1125)
    assert t.z == (8, 4, 4)
    with pytest.raises(NotSphericalError):
        SphericalTriple.of(1, 0, 0)


def test_iteration_is_lexicographic():
    triples = [t.z for t in iter_spherical(15)]
    assert triples == sorted(triples)
    assert triples[:4] == [(0, 0, 0), (2, 1, 0), (2, 1, 1), (3, 0, 1)]


def test_first_triples_prefix_property():
    long = first_triples(100)
    assert first_triples(78) == long[:78]
    assert long[77].z == (12, 6, 3)
    assert first_triples(0) == []
