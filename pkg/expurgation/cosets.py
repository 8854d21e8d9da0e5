# -------------------------------------------------
# Cosets of the rotated subspaces Tv = {(u^2 v, u v) : u in W} of the
# Gabidulin code, removed sets built from them, and the lines their
# lifted codewords free up.
# -------------------------------------------------

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from field.gf16 import LinPoly, ZERO_POLY, nonzero_elements, square, trace, trace_zero_set
from helpers.errors import InvalidConstructionError
from mrd.gabidulin import all_linpolys, graph_subspace
from space.subspace import Subspace, lines_in

logger = logging.getLogger(__name__)

MODES = ("single", "rotated", "fano")


def t_poly(u: int) -> LinPoly:
    """t_u(x) = u^2 x + u x^2."""
    return LinPoly(square(u), u)


def t_subspace(rotor: int = 1) -> FrozenSet[LinPoly]:
    """
    T v = {(u^2 v, u v) : u in W}, a 3-dimensional F_2-subspace of G.

    @param rotor: Nonzero v; the default 1 gives T itself.
    """
    return frozenset(t_poly(u).scaled(rotor) for u in trace_zero_set())


@dataclass(frozen=True, order=True)
class PolyCoset:
    """
    The coset f + T v. The representative is normalised to the smallest member,
    so two PolyCosets are equal iff they have the same members and rotor.
    """
    rotor: int
    rep: LinPoly
    members: FrozenSet[LinPoly] = field(compare=False, repr=False, default=frozenset())

    @classmethod
    def of(cls, rep: LinPoly, rotor: int) -> "PolyCoset":
        if rotor == 0:
            raise InvalidConstructionError("the rotor of a coset must be nonzero")
        members = frozenset(rep + t for t in t_subspace(rotor))
        return cls(rotor, min(members), members)


def all_rotated_cosets() -> List[PolyCoset]:
    """
    The 15 x 32 = 480 cosets f + T v, ordered by rotor and then representative.
    """
    cosets = []
    for rotor in nonzero_elements():
        seen = set()
        for p in all_linpolys():
            if p in seen:
                continue
            coset = PolyCoset.of(p, rotor)
            seen |= coset.members
            cosets.append(coset)
    return cosets


@dataclass(frozen=True)
class RemovedSet:
    """Pairwise disjoint cosets whose lifted codewords are removed from the lifted code."""
    cosets: Tuple[PolyCoset, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidConstructionError(f"unknown removed-set mode '{self.mode}'")
        seen = set()
        for coset in self.cosets:
            if not seen.isdisjoint(coset.members):
                raise InvalidConstructionError(f"coset {coset} overlaps an earlier coset")
            seen |= coset.members

    def polys(self) -> List[LinPoly]:
        """@returns All removed polynomials, sorted."""
        return sorted(p for coset in self.cosets for p in coset.members)

    def words(self) -> List[Subspace]:
        return [graph_subspace(p) for p in self.polys()]

    def __len__(self) -> int:
        return 8 * len(self.cosets)


def smallest_trace_one() -> int:
    return min(x for x in range(16) if trace(x) == 1)


def removed_set(mode: str, reps: Sequence[LinPoly] = None,
                pairs: Iterable[Tuple[LinPoly, int]] = None, u: int = None) -> RemovedSet:
    """
    Builds a removed set.

    single:  cosets rep + T for each rep; default {T, t_u0 + T} with u0 of trace one,
             whose union is {u^2 x + u x^2 : u in GF(16)}.
    rotated: cosets rep + T v for each (rep, v) pair.
    fano:    the 15 cosets (t_u + T) v, v nonzero, for a trace-one u.

    @returns RemovedSet; InvalidConstructionError if cosets overlap.
    """
    if mode == "single":
        if reps is None:
            reps = [ZERO_POLY, t_poly(smallest_trace_one())]
        cosets = [PolyCoset.of(rep, 1) for rep in reps]
    elif mode == "rotated":
        cosets = [PolyCoset.of(rep, rotor) for rep, rotor in (pairs or [])]
    elif mode == "fano":
        u = smallest_trace_one() if u is None else u
        if trace(u) != 1:
            raise InvalidConstructionError(f"fano removed set needs trace(u) = 1, got u = {u}")
        cosets = [PolyCoset.of(t_poly(u).scaled(v), v) for v in nonzero_elements()]
    else:
        raise InvalidConstructionError(f"unknown removed-set mode '{mode}'")
    removed = RemovedSet(tuple(cosets), mode)
    logger.info("removed set (%s): %d cosets, %d polynomials", mode, len(cosets), len(removed))
    return removed


def coset_free_lines(coset: PolyCoset) -> FrozenSet[Subspace]:
    """@returns The 56 lines of the coset's lifted codewords."""
    return frozenset(line for p in coset.members for line in lines_in(graph_subspace(p)))


def free_lines(removed: RemovedSet) -> FrozenSet[Subspace]:
    """
    Lines covered only by removed codewords, 7 per removed codeword.

    @returns frozenset of lines disjoint from the special solid.
    """
    lines = set()
    for coset in removed.cosets:
        lines |= coset_free_lines(coset)
    return frozenset(lines)
