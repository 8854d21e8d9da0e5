# -------------------------------------------------
# The Gabidulin code G = {a0 x + a1 x^2} as binary 3x4 matrices,
# rank distance, the lifting map A -> rowspace(I | A) and the
# graph representation {(x, p(x)) : x in W}.
# -------------------------------------------------

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple

import numpy as np

from field.gf16 import LinPoly, W_BASIS, coords16, eval_linpoly, point_vector
from helpers.errors import DimensionMismatchError, InvalidConstructionError
from space.subspace import Subspace, canonicalize, gf2_rank, lines_in
from space.subspace_code import CodeParams, SubspaceCode

logger = logging.getLogger(__name__)

M_ROWS = 3
N_COLS = 4
LIFT_DIM = M_ROWS + N_COLS
LMRD_DISTANCE = 4


@dataclass(frozen=True)
class RankCodeword:
    """A polynomial of G with its 3x4 matrix (row i = coords of p(w_i))."""
    poly: LinPoly
    matrix: np.ndarray


class LiftedParams(NamedTuple):
    v: int
    size: int
    d: int
    k: int


def all_linpolys() -> List[LinPoly]:
    """@returns The 256 polynomials of G in (a0, a1) value order."""
    return [LinPoly(a0, a1) for a0 in range(16) for a1 in range(16)]


def _bits(value: int, width: int) -> List[int]:
    return [value >> (width - 1 - j) & 1 for j in range(width)]


def codeword_matrix(p: LinPoly) -> np.ndarray:
    """
    The 3x4 binary matrix of x -> a0 x + a1 x^2 restricted to W.

    Row i holds the coordinates of p(w_i), w = (1, a, a^2), in the basis (1, a, a^2, a^3).

    @param p: The polynomial.
    @returns uint8 array of shape (3, 4).
    """
    return np.array([_bits(coords16(eval_linpoly(p, w)), N_COLS) for w in W_BASIS], dtype=np.uint8)


def rank_codeword(p: LinPoly) -> RankCodeword:
    return RankCodeword(p, codeword_matrix(p))


def matrix_rows(A: np.ndarray) -> List[int]:
    """@returns The rows of a binary matrix as bit-vectors (leftmost entry most significant)."""
    weights = 1 << np.arange(A.shape[1] - 1, -1, -1)
    return [int(x) for x in (A.astype(np.int64) @ weights)]


def rank_distance(A: np.ndarray, B: np.ndarray) -> int:
    """
    rank(A - B) over F_2.

    @param A: Binary matrix.
    @param B: Binary matrix of the same shape.
    @returns The rank distance.
    """
    if A.shape != B.shape:
        raise DimensionMismatchError(f"matrix shapes differ: {A.shape} vs {B.shape}")
    return gf2_rank(matrix_rows(np.bitwise_xor(A, B)))


def lift(A: np.ndarray) -> Subspace:
    """
    The row space of (I_m | A), already in canonical form.

    @param A: Binary m x n matrix.
    @returns An m-dimensional subspace of F_2^(m+n).
    """
    m, n = A.shape
    v = m + n
    return Subspace(v, [(1 << (v - 1 - i)) | row for i, row in enumerate(matrix_rows(A))])


def graph_subspace(p: LinPoly) -> Subspace:
    """
    G(a0, a1) = {(x, p(x)) : x in W} as a plane of F_2^7.

    @param p: The polynomial.
    @returns The canonical 3-dimensional subspace.
    """
    return canonicalize([point_vector(w, eval_linpoly(p, w)) for w in W_BASIS], LIFT_DIM)


def lmrd_code() -> SubspaceCode:
    """@returns The lifted Gabidulin (7, 256, 4; 3) code in all_linpolys() order."""
    words = [lift(rank_codeword(p).matrix) for p in all_linpolys()]
    logger.info("built lifted Gabidulin code with %d codewords", len(words))
    return SubspaceCode(CodeParams(LIFT_DIM, M_ROWS, LMRD_DISTANCE), tuple(words), "lmrd")


def line_owner_map() -> Dict[Subspace, LinPoly]:
    """
    Maps each line disjoint from the special solid to the unique polynomial whose
    lifted codeword contains it.

    @returns dict of 1792 lines.
    """
    owners = {}
    for p in all_linpolys():
        for line in lines_in(graph_subspace(p)):
            if line in owners:
                raise InvalidConstructionError(f"line {line} lies in two lifted codewords")
            owners[line] = p
    return owners


def lmrd_parameters(m: int = M_ROWS, n: int = N_COLS, k: int = 2) -> tuple:
    """
    Parameters of a lifted Gabidulin code from m x n matrices with polynomials of q-degree < k.

    The general displayed formula gives distance 2(n-k+1); the concrete 3x4 instance
    actually has distance 2(m-k+1). Both are returned; only the second is certified.

    @returns (formula, instance), each a LiftedParams.
    """
    formula = LiftedParams(m + n, 2 ** (n * k), 2 * (n - k + 1), m)
    instance = LiftedParams(m + n, 2 ** (n * k), 2 * (m - k + 1), m)
    return formula, instance
