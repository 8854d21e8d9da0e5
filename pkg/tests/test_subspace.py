# -------------------------------------------------
# Tests for the Subspace class and the linear algebra on it.
# -------------------------------------------------

import random

import galois
import numpy as np
import pytest

from helpers.errors import DimensionMismatchError
from space.subspace import (Subspace, canonicalize, gf2_rank, join, lines_in, meet_dim,
                            meet_join_dims, orthogonal_complement, subspace_distance)


def random_subspace(rng: random.Random, v: int, k: int) -> Subspace:
    return canonicalize([rng.getrandbits(v) for _ in range(k)], v)


def test_canonical_form():
    U = canonicalize(["1100", "0110"], 4)
    assert U.toStrings() == ["1010", "0110"]
    assert U.dim == 2
    assert U.rows == (0b1010, 0b0110)


def test_canonicalize_idempotent():
    rng = random.Random(11)
    for _ in range(200):
        v = rng.randint(1, 10)
        U = random_subspace(rng, v, rng.randint(0, v))
        assert canonicalize(U.rows, v) == U
        assert canonicalize(reversed(U.rows), v) == U


def test_zero_rows_dropped():
    assert canonicalize([0, 0b101, 0b101], 3).rows == (0b101,)
    assert canonicalize([], 5) == Subspace.zero(5)


def test_bad_rows_rejected():
    with pytest.raises(DimensionMismatchError):
        canonicalize(["101"], 4)
    with pytest.raises(DimensionMismatchError):
        canonicalize([0b10000], 4)
    with pytest.raises(DimensionMismatchError):
        subspace_distance(Subspace.full(3), Subspace.full(4))


def test_line_fast_path():
    rng = random.Random(3)
    for _ in range(200):
        x = rng.randrange(1, 128)
        y = rng.randrange(1, 128)
        if x == y:
            continue
        assert Subspace.line(x, y, 7) == canonicalize([x, y], 7)


def test_points_and_contains():
    U = canonicalize(["1000000", "0100000", "0010000"], 7)
    assert len(U.points()) == 7
    assert all(U.contains(x) for x in U.points())
    assert not U.contains(0b0001000)
    assert len(lines_in(U)) == 7


def test_rank_matches_galois():
    rng = random.Random(5)
    for _ in range(50):
        v = rng.randint(2, 9)
        rows = [rng.getrandbits(v) for _ in range(rng.randint(1, 9))]
        matrix = galois.GF2([[r >> (v - 1 - j) & 1 for j in range(v)] for r in rows])
        assert gf2_rank(rows) == np.linalg.matrix_rank(matrix)


def test_distance_axioms():
    rng = random.Random(17)
    for _ in range(100):
        U, V, X = (random_subspace(rng, 7, rng.randint(1, 4)) for _ in range(3))
        assert subspace_distance(U, U) == 0
        assert subspace_distance(U, V) == subspace_distance(V, U)
        assert subspace_distance(U, X) <= subspace_distance(U, V) + subspace_distance(V, X)
        if U != V:
            assert subspace_distance(U, V) > 0


def test_modular_law():
    rng = random.Random(23)
    for _ in range(100):
        U = random_subspace(rng, 8, rng.randint(0, 6))
        V = random_subspace(rng, 8, rng.randint(0, 6))
        dim_sum, dim_meet, meet = meet_join_dims(U, V)
        assert dim_sum + dim_meet == U.dim + V.dim
        assert dim_sum == join(U, V).dim
        assert meet.dim == dim_meet == meet_dim(U, V)
        assert meet.isSubspaceOf(U) and meet.isSubspaceOf(V)


def span_of(rows) -> set:
    """Every F_2-combination of the rows, zero included."""
    span = {0}
    for r in rows:
        span |= {x ^ r for x in span}
    return span


def test_meet_and_distance_against_enumeration():
    rng = random.Random(31)
    for _ in range(300):
        v = rng.randint(1, 8)
        U = random_subspace(rng, v, rng.randint(0, v))
        V = random_subspace(rng, v, rng.randint(0, v))
        span_u, span_v = span_of(U.rows), span_of(V.rows)
        common = span_u & span_v
        total = span_of(U.rows + V.rows)
        dim_sum, dim_meet, meet = meet_join_dims(U, V)
        assert len(span_u) == 2 ** U.dim and len(span_v) == 2 ** V.dim
        assert len(common) == 2 ** dim_meet
        assert len(total) == 2 ** dim_sum
        assert span_of(meet.rows) == common
        assert meet_dim(U, V) == dim_meet
        assert subspace_distance(U, V) == 2 * (len(total).bit_length() - 1) - U.dim - V.dim
        assert subspace_distance(U, V) == (len(total).bit_length() - 1) - (len(common).bit_length() - 1)


def test_duality_is_an_isometry():
    rng = random.Random(29)
    for _ in range(100):
        U = random_subspace(rng, 7, 3)
        V = random_subspace(rng, 7, 3)
        Up, Vp = orthogonal_complement(U), orthogonal_complement(V)
        assert Up.dim == 7 - U.dim
        assert orthogonal_complement(Up) == U
        assert subspace_distance(Up, Vp) == subspace_distance(U, V)
        for row in Up.rows:
            assert all(bin(row & u).count("1") % 2 == 0 for u in U.rows)


def test_embed():
    line = canonicalize(["1100", "0011"], 4)
    embedded = line.embed(7)
    assert embedded.toStrings() == ["0001100", "0000011"]
    with pytest.raises(DimensionMismatchError):
        embedded.embed(5)


if __name__ == "__main__":
    test_canonical_form()
    test_canonicalize_idempotent()
    test_zero_rows_dropped()
    test_bad_rows_rejected()
    test_line_fast_path()
    test_points_and_contains()
    test_rank_matches_galois()
    test_distance_axioms()
    test_modular_law()
    test_meet_and_distance_against_enumeration()
    test_duality_is_an_isometry()
    test_embed()
