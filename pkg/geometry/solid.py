# -------------------------------------------------
# The special solid S = (0,0,0,*,*,*,*) of PG(6,2), the lines missing it,
# and the default anchor points outside it.
# -------------------------------------------------

from typing import List, Set

from field.gf16 import point_vector, sigma
from helpers.errors import DimensionMismatchError
from space.subspace import Subspace


def special_solid(v: int = 7) -> Subspace:
    """
    The subspace of the last v-3 coordinates; the special solid S for v = 7.

    @param v: Ambient dimension, at least 4.
    @returns Subspace of dimension v-3.
    """
    if v < 4:
        raise DimensionMismatchError(f"no special subspace in F_2^{v}")
    return Subspace(v, tuple(1 << (v - 4 - i) for i in range(v - 3)))


def point(vector: int, v: int = 7) -> Subspace:
    """@returns The 1-dimensional subspace spanned by a nonzero vector."""
    return Subspace(v, (vector,))


def lines_disjoint_from(S: Subspace, v: int) -> Set[Subspace]:
    """
    All lines L of PG(v-1, 2) with L ∩ S = 0.

    @param S: A canonical subspace of F_2^v.
    @param v: Ambient dimension.
    @returns set of canonical lines.
    """
    if S.v != v:
        raise DimensionMismatchError(f"S lives in F_2^{S.v}, not F_2^{v}")
    outside = [x for x in range(1, 1 << v) if not S.contains(x)]
    outside_set = set(outside)
    lines = set()
    for i, x in enumerate(outside):
        for y in outside[i + 1:]:
            if x ^ y in outside_set:
                lines.add(Subspace.line(x, y, v))
    return lines


def default_anchor_points() -> List[Subspace]:
    """
    The seven points F_2(sigma^i(1), 0), i = 0..6, outside S.

    Their 4-flats <p_i, S> are pairwise distinct because the first coordinates differ.
    """
    return [point(point_vector(sigma(1, i), 0)) for i in range(7)]
