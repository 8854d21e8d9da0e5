# -------------------------------------------------
# Tests for the line-meeting augmentation pool and the augmentation searches.
# -------------------------------------------------

import random

import pytest

from geometry.packing import sigma_orbit_planes
from geometry.solid import special_solid
from helpers.errors import InvalidConstructionError
from mrd.gabidulin import lmrd_code
from search.augment import (AugmentationPool, SearchConfig, attainment_statistics, exact_augment,
                            greedy_pass, line_meeting_planes, line_meeting_pool, plane_graph,
                            randomized_augment)
from space.subspace import canonicalize, meet_dim


def test_search_config():
    config = SearchConfig(seed=3)
    assert config.restartSeed(0) == 3 * 1_000_003
    assert config.restartSeed(5) == 3 * 1_000_003 + 5
    assert SearchConfig(seed=2 ** 64 - 1).restartSeed(1) < 2 ** 64
    with pytest.raises(InvalidConstructionError):
        SearchConfig(restarts=0)
    with pytest.raises(InvalidConstructionError):
        SearchConfig(strategy="annealing")


def test_line_meeting_planes():
    S = special_solid()
    planes = line_meeting_planes()
    assert len(planes) == 995
    assert len(set(planes)) == 995
    assert sum(1 for P in planes if meet_dim(P, S) == 3) == 15
    assert all(meet_dim(P, S) >= 2 for P in planes)
    assert len(line_meeting_planes(include_in_S=False)) == 980


def test_sigma_orbit_pool_is_taken_whole():
    pool = AugmentationPool(sigma_orbit_planes())
    result = randomized_augment(lmrd_code(), SearchConfig(seed=1, restarts=3), pool)
    assert len(result.added) == 35
    assert result.final.size == 291
    assert exact_augment(lmrd_code(), pool).final.size == 291


def test_empty_pool():
    result = randomized_augment(lmrd_code(), SearchConfig(restarts=2), AugmentationPool([]))
    assert result.added == ()
    assert result.final.size == 256
    assert result.histogram == {0: 2}


def test_greedy_pass_is_maximal():
    pool = line_meeting_pool()
    allowed = pool.allowedMask(lmrd_code().words)
    assert allowed == (1 << len(pool.planes)) - 1
    chosen = greedy_pass(pool.graph, allowed, random.Random(4))
    assert pool.graph.isClique(chosen)
    clique_mask = sum(1 << v for v in chosen)
    for v in range(pool.graph.n):
        if v not in chosen:
            assert pool.graph.adjacency[v] & clique_mask != clique_mask


def test_randomized_augment_is_reproducible():
    pool = line_meeting_pool()
    config = SearchConfig(seed=7, restarts=4)
    first = randomized_augment(lmrd_code(), config, pool)
    second = randomized_augment(lmrd_code(), config, pool)
    assert first.added == second.added
    assert first.restarts_run == 4
    assert sum(first.histogram.values()) == 4


def test_allowed_respects_base():
    pool = line_meeting_pool()
    P = pool.planes[0]
    allowed = set(pool.allowed([P]))
    assert 0 not in allowed
    assert all(pool.graph.hasEdge(0, j) for j in allowed)


def test_plane_graph_filters_base():
    code = lmrd_code()
    clashing = canonicalize([code.words[0].rows[0], code.words[0].rows[1], 1], 7)
    g = plane_graph([clashing] + sigma_orbit_planes(), base=code)
    assert g.n == 35
    assert g.edgeCount() == 35 * 34 // 2
    with pytest.raises(InvalidConstructionError):
        plane_graph([special_solid()])


def test_attainment_statistics():
    assert attainment_statistics([3, 1, 3]) == {1: 1, 3: 2}
    assert list(attainment_statistics([5, 2, 9, 2])) == [2, 5, 9]


if __name__ == "__main__":
    test_search_config()
    test_line_meeting_planes()
    test_sigma_orbit_pool_is_taken_whole()
    test_empty_pool()
    test_greedy_pass_is_maximal()
    test_randomized_augment_is_reproducible()
    test_allowed_respects_base()
    test_plane_graph_filters_base()
    test_attainment_statistics()
