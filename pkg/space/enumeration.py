# -------------------------------------------------
# Counting and enumerating subspaces of F_2^v.
# Enumeration walks echelon pivot patterns in lexicographic order
# and fills the free entries in increasing integer order.
# -------------------------------------------------

from itertools import combinations
from typing import Iterator, List
from helpers.errors import DimensionMismatchError
from space.subspace import Subspace, MAX_AMBIENT_DIM


def gaussian_binomial(v: int, k: int, q: int = 2) -> int:
    """
    Number of k-dimensional subspaces of F_q^v.

    @param v: Ambient dimension.
    @param k: Subspace dimension, 0 <= k <= v.
    @param q: Field size, at least 2.
    @returns prod_{i<k} (q^(v-i) - 1) / (q^(k-i) - 1) as an exact integer.
    """
    if not 0 <= k <= v or q < 2:
        raise ValueError(f"gaussian_binomial needs 0 <= k <= v and q >= 2, got v={v} k={k} q={q}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (v - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def steiner_bound(v: int, q: int = 2) -> int:
    """
    Double-counting bound on (v, M, 4; 3)_q codes: every line lies in at most one plane.

    @param v: Ambient dimension, at least 3.
    @returns floor([v,2]_q / [3,2]_q); 381 for v=7.
    """
    return gaussian_binomial(v, 2, q) // gaussian_binomial(3, 2, q)


def _free_positions(pivots: tuple, v: int) -> List[List[int]]:
    """For each pivot, the non-pivot columns to its right (these are free in RREF)."""
    pivot_set = set(pivots)
    return [[c for c in range(p + 1, v) if c not in pivot_set] for p in pivots]


def enumerate_subspaces(v: int, k: int) -> Iterator[Subspace]:
    """
    Yields every k-dimensional subspace of F_2^v exactly once, in canonical form.

    The order is deterministic: pivot columns in lexicographic order, then free entries
    read as a binary counter (first row's free columns most significant).

    @param v: Ambient dimension, at most MAX_AMBIENT_DIM.
    @param k: Subspace dimension.
    """
    if not 0 <= k <= v <= MAX_AMBIENT_DIM:
        raise DimensionMismatchError(f"cannot enumerate {k}-subspaces of F_2^{v}")
    for pivots in combinations(range(v), k):
        free = _free_positions(pivots, v)
        slots = [(i, c) for i, cols in enumerate(free) for c in cols]
        n_slots = len(slots)
        base = [1 << (v - 1 - p) for p in pivots]
        for fill in range(1 << n_slots):
            rows = list(base)
            for s, (i, c) in enumerate(slots):
                if fill >> (n_slots - 1 - s) & 1:
                    rows[i] |= 1 << (v - 1 - c)
            yield Subspace(v, rows)

