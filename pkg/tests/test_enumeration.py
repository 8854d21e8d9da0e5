# -------------------------------------------------
# Tests for subspace counting and enumeration.
# -------------------------------------------------

import pytest

from helpers.errors import DimensionMismatchError
from space.enumeration import enumerate_subspaces, gaussian_binomial, steiner_bound
from space.subspace import canonicalize


def test_gaussian_binomials():
    assert gaussian_binomial(7, 1) == 127
    assert gaussian_binomial(7, 2) == 2667
    assert gaussian_binomial(7, 3) == 11811
    assert gaussian_binomial(7, 4) == 11811
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(5, 0) == 1
    assert gaussian_binomial(4, 2, q=3) == 130
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)


def test_steiner_bound():
    assert steiner_bound(7) == 381
    assert steiner_bound(6) == 93


def test_enumeration_counts():
    for v in range(1, 9):
        for k in range(v + 1):
            assert sum(1 for _ in enumerate_subspaces(v, k)) == gaussian_binomial(v, k)


def test_enumeration_is_canonical_and_distinct():
    for k in range(6):
        subspaces = list(enumerate_subspaces(5, k))
        assert len(set(subspaces)) == len(subspaces)
        assert all(canonicalize(U.rows, 5) == U for U in subspaces)
        assert all(U.dim == k for U in subspaces)


def test_enumeration_bounds():
    with pytest.raises(DimensionMismatchError):
        list(enumerate_subspaces(3, 4))


if __name__ == "__main__":
    test_gaussian_binomials()
    test_steiner_bound()
    test_enumeration_counts()
    test_enumeration_is_canonical_and_distinct()
    test_enumeration_bounds()
