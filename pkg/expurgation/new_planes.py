# -------------------------------------------------
# New planes: planes meeting the special solid S in a single point whose
# four S-disjoint lines are all free. Generic generation from free lines,
# the closed form for the single-T case, and the multiplicative maps
# (x, y) -> (x, v y) that permute the points of S.
# -------------------------------------------------

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from expurgation.cosets import PolyCoset, coset_free_lines, t_poly
from field.gf16 import eval_linpoly, mul, point_vector, split_vector, trace_zero_set
from geometry.solid import point, special_solid
from helpers.errors import InvalidConstructionError
from space.subspace import Subspace, canonicalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class NewPlane:
    """A plane meeting S in exactly the point `anchor`, with its four S-disjoint lines."""
    anchor: Subspace
    plane: Subspace
    covered_lines: Tuple[Subspace, ...]

    def anchorVector(self) -> int:
        return self.anchor.rows[0]


def _disjoint_lines(s: int, x1: int, x2: int, v: int) -> Tuple[Subspace, ...]:
    """The four lines of <s, x1, x2> missing S, given s in S and <x1, x2> missing S."""
    return (Subspace.line(x1, x2, v),
            Subspace.line(x1, x2 ^ s, v),
            Subspace.line(x1 ^ s, x2, v),
            Subspace.line(x1 ^ s, x2 ^ s, v))


def candidate_new_planes(free: Iterable[Subspace], S: Subspace = None) -> List[NewPlane]:
    """
    Every plane P with dim(P ∩ S) = 1 whose four S-disjoint lines are all free.

    Each candidate is <s, L> for a point s of S and a free line L; it is kept when the
    other three S-disjoint lines of <s, L> are free as well.

    @param free: Free lines, all disjoint from S.
    @param S: The special solid.
    @returns NewPlanes ordered by anchor vector, then plane.
    """
    S = special_solid() if S is None else S
    free = frozenset(free)
    v = S.v
    for line in free:
        if any(S.contains(x) for x in line.points()):
            raise InvalidConstructionError(f"free line {line} meets S")
    found = {}
    for s in sorted(S.points()):
        for line in free:
            x1, x2 = line.rows
            lines = _disjoint_lines(s, x1, x2, v)
            if all(l in free for l in lines):
                plane = canonicalize([s, x1, x2], v)
                if plane not in found:
                    found[plane] = NewPlane(point(s, v), plane, tuple(sorted(lines)))
    planes = sorted(found.values(), key=lambda n: (n.anchorVector(), n.plane))
    logger.info("%d candidate new planes from %d free lines", len(planes), len(free))
    return planes


def group_by_anchor(planes: Iterable[NewPlane]) -> Dict[int, List[NewPlane]]:
    """@returns anchor vector -> new planes through it, keys in increasing order."""
    groups = defaultdict(list)
    for n in planes:
        groups[n.anchorVector()].append(n)
    return dict(sorted(groups.items()))


def coset_induced_planes(coset: PolyCoset, S: Subspace = None) -> List[NewPlane]:
    """@returns The new planes formed from the free lines of one coset alone."""
    return candidate_new_planes(coset_free_lines(coset), S)


def w_lines() -> List[Tuple[int, int]]:
    """The seven 2-dimensional subspaces Z = <a, b> of W, as sorted basis pairs (a, b)."""
    nonzero = [w for w in sorted(trace_zero_set()) if w]
    seen = []
    bases = []
    for i, a in enumerate(nonzero):
        for b in nonzero[i + 1:]:
            z = frozenset((a, b, a ^ b))
            if z not in seen:
                seen.append(z)
                bases.append((a, b))
    return bases


def closed_form_new_planes() -> List[NewPlane]:
    """
    The 28 planes N(Z, u) = {(x, u^2 x + u x^2 + y) : x in Z, y in F_2 c_Z},
    c_Z = a^2 b + a b^2, for the seven Z = <a, b> in W and the four cosets u + Z in GF(16).

    @returns NewPlanes ordered like candidate_new_planes.
    """
    v = 7
    planes = []
    for a, b in w_lines():
        c = mul(mul(a, b), a ^ b)
        anchor = point_vector(0, c)
        reps = sorted({min(u, u ^ a, u ^ b, u ^ a ^ b) for u in range(16)})
        for u in reps:
            t = t_poly(u)
            x1 = point_vector(a, eval_linpoly(t, a))
            x2 = point_vector(b, eval_linpoly(t, b))
            plane = canonicalize([anchor, x1, x2], v)
            lines = _disjoint_lines(anchor, x1, x2, v)
            planes.append(NewPlane(point(anchor, v), plane, tuple(sorted(lines))))
    return sorted(planes, key=lambda n: (n.anchorVector(), n.plane))


def subplane_check(planes: Sequence[NewPlane]) -> bool:
    """
    @returns True if the anchors of the planes are exactly the seven points (0, w), w in W,
             i.e. a subplane of S.
    """
    anchors = {n.anchorVector() for n in planes}
    expected = {point_vector(0, w) for w in trace_zero_set() if w}
    closed = all(x ^ y in anchors for x in anchors for y in anchors if x != y)
    return closed and anchors == expected


def plane_footprint(planes: Iterable[NewPlane]) -> FrozenSet[Tuple[int, int]]:
    """
    The (anchor, point) pairs of the planes' points outside S. Two new planes through the
    same anchor share a line iff they share such a pair.
    """
    S = special_solid()
    return frozenset((n.anchorVector(), x) for n in planes for x in n.plane.points() if not S.contains(x))


def singer_map(rotor: int) -> List[int]:
    """
    The linear map (x, y) -> (x, rotor * y) on 7-bit vectors, as a lookup table.

    @param rotor: Nonzero element of GF(16).
    """
    if rotor == 0:
        raise InvalidConstructionError("the Singer map needs a nonzero multiplier")
    table = []
    for vector in range(128):
        x, y = split_vector(vector)
        table.append(point_vector(x, mul(rotor, y)))
    return table


def map_subspace(U: Subspace, table: Sequence[int]) -> Subspace:
    """@returns The image of U under the linear map given by a lookup table."""
    return canonicalize([table[row] for row in U.rows], U.v)


def map_new_plane(n: NewPlane, table: Sequence[int]) -> NewPlane:
    return NewPlane(map_subspace(n.anchor, table), map_subspace(n.plane, table),
                    tuple(sorted(map_subspace(l, table) for l in n.covered_lines)))
