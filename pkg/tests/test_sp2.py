import pytest
from hypothesis import given
from hypothesis import strategies as st

from awspec.sp2 import (
    RHO,
    RHO_BAR,
    Sp2Triple,
    is_sp1prime_spherical,
    restrict,
    sp2_multiplicity,
    sp2_partition,
    weyl_group,
)


def test_rho():
    assert RHO.coords == (1, 2, 1)
    assert RHO_BAR == (1, 3)
    assert restrict((1, 2, 3)) == (1, 5)


def test_partition_examples():
    assert sp2_partition(0, 0) == 1
    assert sp2_partition(1, 1) == 1  # (1/2, 1/2)
    assert sp2_partition(1, 0) == 0
    assert sp2_partition(0, 2) == 2
    assert sp2_partition(0, 4) == 3
    assert sp2_partition(4, 2) == 0


def test_weyl_group():
    elements = list(weyl_group())
    assert len(elements) == 16
    assert sum(sign for _, sign in elements) == 0


def test_highest_weight():
    assert Sp2Triple(1, 0, 0).highest_weight().coords == (0, 1, 0)
    assert Sp2Triple(0, 1, 1).highest_weight().coords == (1, 1, 1)


def test_small_cases():
    assert sp2_multiplicity(0, 0, 0) == 1
    assert is_sp1prime_spherical(1, 0, 1)
    assert not is_sp1prime_spherical(1, 0, 0)
    assert is_sp1prime_spherical(0, 3, 0)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_criterion(n1, n2, n3):
    assert is_sp1prime_spherical(n1, n2, n3) == (n1 == n3)


@given(st.integers(0, 8), st.integers(0, 8))
def test_multiplicity_one_when_spherical(n, n2):
    assert sp2_multiplicity(n, n2, n) == 1


def test_negative_rejected():
    with pytest.raises(ValueError):
        sp2_multiplicity(-1, 0, 0)
