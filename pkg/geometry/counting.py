# -------------------------------------------------
# Counting identities for a putative Steiner system S(2,3,v)_2, i.e. a
# (v, [v,2]/7, 4; 3) code covering every line exactly once, relative to
# a distinguished subspace of dimension v-3.
# -------------------------------------------------

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from helpers.errors import InfeasibleCountError
from space.enumeration import gaussian_binomial


class IntersectionVector(NamedTuple):
    """Numbers of codewords meeting S in dimension 0, 1, 2 and 3."""
    a0: int
    a1: int
    a2: int
    a3: int

    @property
    def size(self) -> int:
        return self.a0 + self.a1 + self.a2 + self.a3


@dataclass(frozen=True)
class FlagCounts:
    size: int
    per_point: int
    per_hyperplane: int
    per_4flat: int
    per_flag: int
    solids_containing: int
    solids_not_containing: int

    def to_dict(self) -> dict:
        return asdict(self)


def _exact(numerator: int, denominator: int, what: str) -> int:
    if numerator % denominator:
        raise InfeasibleCountError(f"{what} = {numerator}/{denominator} is not an integer")
    value = numerator // denominator
    if value < 0:
        raise InfeasibleCountError(f"{what} = {value} is negative")
    return value


def steiner_size(v: int) -> int:
    """@returns M = [v,2]/[3,2], the size of a putative Steiner system."""
    if v < 7:
        raise InfeasibleCountError(f"v = {v} is below 7")
    return _exact(gaussian_binomial(v, 2), gaussian_binomial(3, 2), "M")


def replication(v: int) -> int:
    """@returns r = (2^(v-1) - 1)/3, the number of codewords through a point."""
    return _exact(2 ** (v - 1) - 1, 3, "r")


def steiner_intersection_vector(v: int, a3: int) -> IntersectionVector:
    """
    The intersection vector of the distinguished (v-3)-subspace S forced by a3.

    Lines of S: each lies in exactly one codeword, so a2 = [v-3,2] - 7 a3.
    Point-codeword incidences inside S: n_S r = a1 + 3 a2 + 7 a3.
    The rest meet S trivially: a0 = M - a1 - a2 - a3.

    @param v: Ambient dimension, at least 7.
    @param a3: Number of codewords contained in S.
    @returns The IntersectionVector, raising InfeasibleCountError on negative or fractional entries.
    """
    if a3 < 0:
        raise InfeasibleCountError(f"a3 = {a3} is negative")
    M = steiner_size(v)
    r = replication(v)
    n_S = gaussian_binomial(v - 3, 1)
    a2 = _exact(gaussian_binomial(v - 3, 2) - 7 * a3, 1, "a2")
    a1 = _exact(n_S * r - 3 * a2 - 7 * a3, 1, "a1")
    a0 = _exact(M - a1 - a2 - a3, 1, "a0")
    return IntersectionVector(a0, a1, a2, a3)


def new_planes_per_point(v: int, a3: int) -> Optional[int]:
    """
    Codewords meeting S in exactly a point, per point of S.

    @returns a1 / |points of S| when integral, else None.
    """
    a1 = steiner_intersection_vector(v, a3).a1
    n_S = gaussian_binomial(v - 3, 1)
    return a1 // n_S if a1 % n_S == 0 else None


def codewords_in_s_ratio(v: int, a3: int) -> Fraction:
    """@returns a3 divided by the number of points of S (3 for v = 13, a3 = 3069)."""
    return Fraction(a3, gaussian_binomial(v - 3, 1))


def flag_counts(v: int) -> FlagCounts:
    """
    Incidence numbers any Steiner system S(2,3,v)_2 must have.

    A hyperplane H holding h codewords: its lines give [v-1,2] = 7h + (M - h).
    A codim-2 flat F holding f codewords: counting lines and points of F gives
    [v-2,1] r = 2 [v-2,2] + M - 8f.
    A flag (p, H): lines through p in H give 2^(v-2) - 1 = 3x + (r - x).
    Two codewords never share a solid, so M (2^(v-3) - 1) solids contain one.

    @param v: Ambient dimension, at least 7.
    @returns FlagCounts, raising InfeasibleCountError where a count is not integral.
    """
    M = steiner_size(v)
    r = replication(v)
    per_hyperplane = _exact(gaussian_binomial(v - 1, 2) - M, 6, "codewords per hyperplane")
    per_4flat = _exact(2 * gaussian_binomial(v - 2, 2) + M - gaussian_binomial(v - 2, 1) * r, 8,
                       "codewords per codim-2 flat")
    per_flag = _exact(2 ** (v - 2) - 1 - r, 2, "codewords per point-hyperplane flag")
    containing = M * (2 ** (v - 3) - 1)
    not_containing = _exact(gaussian_binomial(v, 4) - containing, 1, "solids without a codeword")
    return FlagCounts(M, r, per_hyperplane, per_4flat, per_flag, containing, not_containing)
