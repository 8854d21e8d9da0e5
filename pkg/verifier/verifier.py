# -------------------------------------------------
# Independent certification of subspace codes. Everything is recomputed
# from the raw codewords; the provenance tag is never consulted.
# -------------------------------------------------

import logging
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterable, NamedTuple, Optional

from geometry.counting import IntersectionVector
from helpers.errors import DimensionMismatchError, VerificationError
from space.enumeration import enumerate_subspaces, gaussian_binomial
from space.subspace import Subspace, canonicalize, meet_dim, subspace_distance
from space.subspace_code import CodeParams, SubspaceCode

logger = logging.getLogger(__name__)


class Coverage(NamedTuple):
    double_covers: int
    uncovered: int


@dataclass(frozen=True)
class VerificationReport:
    params_claimed: CodeParams
    claimed_size: int
    size: int
    min_distance: Optional[int]
    line_double_covers: int
    intersection_vector: Optional[IntersectionVector]
    dual_checked: bool
    dual_min_distance: Optional[int]
    passed: bool

    def to_dict(self) -> dict:
        """@returns A JSON-ready dict mirroring the report fields."""
        out = asdict(self)
        out["params_claimed"] = {"q": self.params_claimed.q, "v": self.params_claimed.v,
                                 "k": self.params_claimed.k, "d": self.params_claimed.d}
        out["intersection_vector"] = None if self.intersection_vector is None \
            else list(self.intersection_vector)
        out["pass"] = out.pop("passed")
        return out


def min_distance(code: SubspaceCode) -> int:
    """
    Exact minimum subspace distance over all pairs of codewords.

    @param code: A code with at least two words.
    @returns The minimum distance.
    """
    words = code.words
    if len(words) < 2:
        raise VerificationError(f"minimum distance needs two codewords, got {len(words)}")
    best = None
    for i, U in enumerate(words):
        for V in words[i + 1:]:
            d = subspace_distance(U, V)
            if best is None or d < best:
                best = d
    return best


def subspaces_in(U: Subspace, t: int) -> Iterable[Subspace]:
    """
    All t-dimensional subspaces of U, via the t-subspaces of F_2^dim(U) mapped through U's rows.
    """
    k = U.dim
    for coeffs in enumerate_subspaces(k, t):
        rows = []
        for c in coeffs.rows:
            vec = 0
            for i in range(k):
                if c >> (k - 1 - i) & 1:
                    vec ^= U.rows[i]
            rows.append(vec)
        yield canonicalize(rows, U.v)


def coverage_check(code: SubspaceCode, t: int, restrict_to: Iterable[Subspace] = None) -> Coverage:
    """
    How often t-subspaces are covered by codewords.

    @param code: The code.
    @param t: Dimension, at most k.
    @param restrict_to: Optional universe of t-subspaces (e.g. the lines missing S);
                        default is all t-subspaces of F_2^v.
    @returns Coverage(double_covers, uncovered).
    """
    if t > code.params.k:
        raise DimensionMismatchError(f"t = {t} exceeds k = {code.params.k}")
    counts = Counter(T for U in code.words for T in subspaces_in(U, t))
    if restrict_to is None:
        double = sum(1 for c in counts.values() if c > 1)
        uncovered = gaussian_binomial(code.params.v, t) - len(counts)
    else:
        universe = set(restrict_to)
        double = sum(1 for T in universe if counts.get(T, 0) > 1)
        uncovered = sum(1 for T in universe if T not in counts)
    return Coverage(double, uncovered)


def intersection_vector(code: SubspaceCode, S: Subspace) -> IntersectionVector:
    """
    a_i = number of codewords U with dim(U ∩ S) = i.

    @param code: A code whose words meet S in dimension at most 3.
    @param S: The distinguished subspace.
    """
    if S.v != code.params.v:
        raise DimensionMismatchError(f"S lives in F_2^{S.v}, the code in F_2^{code.params.v}")
    if min(code.params.k, S.dim) > 3:
        raise DimensionMismatchError("intersection dimensions above 3 do not fit an intersection vector")
    counts = [0, 0, 0, 0]
    for U in code.words:
        counts[meet_dim(U, S)] += 1
    return IntersectionVector(*counts)


def dual_check(code: SubspaceCode) -> bool:
    """@returns True if the dual code has the same minimum distance."""
    return min_distance(code.dual()) == min_distance(code)


def full_report(code: SubspaceCode, S: Subspace, claimed_size: int = None) -> VerificationReport:
    """
    Certifies a code: exact minimum distance, t-subspace double covers
    (t = k - d/2 + 1), intersection vector against S and the dual distance.

    pass iff min distance >= claimed d, the number of words equals the claimed size,
    no t-subspace is covered twice (when d >= 4) and the dual has the same distance.

    @param code: The code.
    @param S: Distinguished subspace for the intersection vector.
    @param claimed_size: Size declared by a file header (default: number of words).
    """
    params = code.params
    claimed_size = code.size if claimed_size is None else claimed_size
    try:
        d = min_distance(code)
        dual_d = min_distance(code.dual())
    except VerificationError as e:
        logger.warning("cannot certify: %s", e)
        d = dual_d = None
    double = coverage_check(code, params.t).double_covers if params.t >= 1 else 0
    try:
        vector = intersection_vector(code, S)
    except DimensionMismatchError as e:
        logger.warning("no intersection vector: %s", e)
        vector = None
    passed = (d is not None and d >= params.d and code.size == claimed_size
              and (double == 0 or params.d < 4) and dual_d == d)
    report = VerificationReport(params, claimed_size, code.size, d, double, vector,
                                dual_d is not None, dual_d, passed)
    logger.info("verification of %s: %s", code.provenance or "code", "pass" if passed else "FAIL")
    return report
