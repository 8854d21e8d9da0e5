# -------------------------------------------------
# Line packings of PG(3,2) and the two families of 35 augmentation
# planes meeting the special solid in a line.
# -------------------------------------------------

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from field.gf16 import F4, check_sigma, exp, mul, point_vector, sigma
from helpers.errors import InvalidConstructionError
from space.enumeration import enumerate_subspaces
from space.subspace import Subspace, canonicalize, join
from geometry.solid import special_solid

logger = logging.getLogger(__name__)

PG3_DIM = 4
N_SPREADS = 7
SPREAD_SIZE = 5


@dataclass(frozen=True)
class LinePacking:
    """
    Seven spreads of five lines each partitioning the 35 lines of PG(3,2).
    Lines live in ambient dimension 4.
    """
    spreads: Tuple[Tuple[Subspace, ...], ...]

    def __post_init__(self):
        self.validate()

    def validate(self):
        if len(self.spreads) != N_SPREADS or any(len(s) != SPREAD_SIZE for s in self.spreads):
            raise InvalidConstructionError("a packing needs 7 spreads of 5 lines")
        all_points = frozenset(range(1, 1 << PG3_DIM))
        for i, spread in enumerate(self.spreads):
            covered = [p for line in spread for p in line.points()]
            if len(covered) != len(all_points) or set(covered) != all_points:
                raise InvalidConstructionError(f"spread {i} is not a partition of the points")
        lines = [line for spread in self.spreads for line in spread]
        if len(set(lines)) != len(lines):
            raise InvalidConstructionError("a line occurs in two spreads")

    def lines(self) -> List[Subspace]:
        return [line for spread in self.spreads for line in spread]


def _all_spreads(lines: List[Subspace]) -> List[Tuple[int, ...]]:
    """Every spread of PG(3,2) as a sorted tuple of line indices."""
    by_point = {p: [i for i, line in enumerate(lines) if p in line.points()] for p in range(1, 16)}
    spreads = []

    def extend(chosen: List[int], covered: frozenset):
        if len(covered) == 15:
            spreads.append(tuple(sorted(chosen)))
            return
        first = min(set(range(1, 16)) - covered)
        for i in by_point[first]:
            pts = lines[i].points()
            if covered.isdisjoint(pts):
                chosen.append(i)
                extend(chosen, covered | pts)
                chosen.pop()

    extend([], frozenset())
    return sorted(set(spreads))


def kirkman_packing() -> LinePacking:
    """
    A line packing of PG(3,2) found by deterministic exact-cover backtracking.

    Lines are indexed in enumerate_subspaces(4, 2) order; at each step the lowest
    uncovered line is covered by the lexicographically first compatible spread.

    @returns A valid LinePacking.
    """
    lines = list(enumerate_subspaces(PG3_DIM, 2))
    spreads = _all_spreads(lines)
    logger.debug("PG(3,2) has %d spreads", len(spreads))
    by_line = {i: [s for s in spreads if i in s] for i in range(len(lines))}
    chosen: List[Tuple[int, ...]] = []

    def search(used: frozenset) -> bool:
        if len(used) == len(lines):
            return True
        first = min(set(range(len(lines))) - used)
        for s in by_line[first]:
            if used.isdisjoint(s):
                chosen.append(s)
                if search(used | frozenset(s)):
                    return True
                chosen.pop()
        return False

    if not search(frozenset()):
        raise InvalidConstructionError("no line packing of PG(3,2) found")
    return LinePacking(tuple(tuple(lines[i] for i in s) for s in chosen))


def _f4_line(scale: int, times: int) -> Subspace:
    """sigma^times(scale * F_4) as a line of F_2^4 (coordinates of the second component)."""
    return canonicalize([point_vector(0, sigma(mul(scale, f), times)) for f in F4[1:]], PG3_DIM)


def sigma_packing() -> LinePacking:
    """
    The packing {sigma^i(a^j F_4)}: spread i consists of the images under sigma^i
    of the five F_4-lines a^j F_4, j = 0..4.
    """
    check_sigma()
    return LinePacking(tuple(tuple(_f4_line(exp(j), i) for j in range(SPREAD_SIZE))
                             for i in range(N_SPREADS)))


def augmentation_planes(anchor_points: Sequence[Subspace], packing: LinePacking,
                        S: Subspace = None) -> List[Subspace]:
    """
    The 35 planes <p_i, L>, L in spread i.

    @param anchor_points: Seven points outside S whose 4-flats <p_i, S> are distinct.
    @param packing: Line packing of PG(3,2); its lines are embedded into S.
    @param S: The special solid (default for v = 7).
    @returns Planes ordered by (i, position of L in spread i).
    """
    if S is None:
        S = special_solid()
    if len(anchor_points) != N_SPREADS:
        raise InvalidConstructionError(f"need 7 anchor points, got {len(anchor_points)}")
    flats = []
    for p in anchor_points:
        if p.dim != 1 or p.v != S.v or S.contains(p.rows[0]):
            raise InvalidConstructionError(f"anchor {p} is not a point outside S")
        flats.append(join(p, S))
    if len(set(flats)) != N_SPREADS:
        raise InvalidConstructionError("the 4-flats <p_i, S> are not pairwise distinct")
    planes = []
    for p, spread in zip(anchor_points, packing.spreads):
        for line in spread:
            embedded = line.embed(S.v)
            if not embedded.isSubspaceOf(S):
                raise InvalidConstructionError(f"packing line {line} does not embed into S")
            planes.append(join(p, embedded))
    return planes


def sigma_orbit_planes() -> List[Subspace]:
    """
    The 35 planes E(i, j) = sigma^i(F_2) x sigma^i(a^j F_4), sigma acting on both
    coordinates of W x GF(16).

    @returns Planes ordered by (i, j).
    """
    check_sigma()
    planes = []
    for i in range(N_SPREADS):
        x = sigma(1, i)
        for j in range(SPREAD_SIZE):
            ys = [sigma(mul(exp(j), f), i) for f in F4[1:]]
            planes.append(canonicalize([point_vector(x, 0)] + [point_vector(0, y) for y in ys], 7))
    return planes
