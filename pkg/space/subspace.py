# -------------------------------------------------
# Class for subspaces of F_2^v in canonical reduced row-echelon form,
# plus the exact linear algebra on them (sums, meets, distance, duality).
#
# Bit-vector convention: a vector of length v is an int whose v-bit binary
# string, most significant bit first, lists the entries left to right.
# So position j of the string is bit (v - 1 - j) of the int, and the
# leftmost pivot of a row is its highest set bit.
# -------------------------------------------------

from typing import Iterable, List, Sequence, Tuple, Union
from helpers.errors import DimensionMismatchError

MAX_AMBIENT_DIM = 16

RawRow = Union[int, str]


class Subspace:
    """
    A subspace of F_2^v stored as the rows of its reduced row-echelon generator matrix.

    Rows are kept in decreasing integer order, which is the same as strictly increasing
    pivot positions read left to right. Two subspaces are equal iff their row tuples are.
    Instances are never mutated after construction.
    """

    __slots__ = ("v", "rows", "dim", "_points")

    def __init__(self, v: int, rows: Sequence[int]):
        """
        Wraps rows that are already in canonical form. Use canonicalize() for anything else.

        @param v: Ambient dimension.
        @param rows: Canonical rows (reduced echelon, decreasing order).
        """
        self.v = v
        self.rows: Tuple[int, ...] = tuple(rows)
        self.dim = len(self.rows)
        self._points = None

    @classmethod
    def line(cls, x: int, y: int, v: int) -> "Subspace":
        """
        Canonical line through two distinct nonzero vectors.

        The largest of x, y, x^y carries the top pivot; the smallest is the second row.

        @param x: First nonzero vector.
        @param y: Second nonzero vector, different from x.
        @param v: Ambient dimension.
        @returns The 2-dimensional Subspace spanned by x and y.
        """
        z = x ^ y
        low = min(x, y, z)
        high = max(x, y, z)
        return cls(v, (min(high, high ^ low), low))

    @classmethod
    def zero(cls, v: int) -> "Subspace":
        """@returns The zero subspace of F_2^v."""
        return cls(v, ())

    @classmethod
    def full(cls, v: int) -> "Subspace":
        """@returns F_2^v itself."""
        return cls(v, tuple(1 << (v - 1 - i) for i in range(v)))

    def points(self) -> frozenset:
        """
        All nonzero vectors of the subspace (the points of the projective flat).

        @returns frozenset of 2^dim - 1 ints.
        """
        if self._points is None:
            span = [0]
            for row in self.rows:
                span += [s ^ row for s in span]
            self._points = frozenset(span[1:])
        return self._points

    def contains(self, vector: int) -> bool:
        """
        @param vector: A vector of F_2^v.
        @returns True if vector lies in the subspace.
        """
        for row in self.rows:
            if vector >> (row.bit_length() - 1) & 1:
                vector ^= row
        return vector == 0

    def isSubspaceOf(self, other: "Subspace") -> bool:
        """@returns True if every row of self lies in other."""
        _check_same_ambient(self, other)
        return all(other.contains(row) for row in self.rows)

    def embed(self, v: int) -> "Subspace":
        """
        Views the subspace inside a larger ambient space, occupying the last coordinates.

        @param v: New ambient dimension, at least the current one.
        @returns The same rows in ambient dimension v.
        """
        if v < self.v:
            raise DimensionMismatchError(f"cannot embed F_2^{self.v} into F_2^{v}")
        return Subspace(v, self.rows)

    def toStrings(self) -> List[str]:
        """@returns The generator rows as strings over {0,1} of length v."""
        return [format(row, f"0{self.v}b") for row in self.rows]

    def _key(self):
        return (self.v, self.dim, self.rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Subspace):
            return self.v == other.v and self.rows == other.rows
        return False

    def __lt__(self, other: "Subspace") -> bool:
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash((self.v, self.rows))

    def __repr__(self):
        return f"Subspace(v={self.v}, rows={self.toStrings()})"


def _check_same_ambient(U: Subspace, V: Subspace):
    if U.v != V.v:
        raise DimensionMismatchError(f"ambient dimensions differ: {U.v} vs {V.v}")


def _to_int(row: RawRow, v: int) -> int:
    """Converts a raw row (int or 0/1 string) to an int, checking its length."""
    if isinstance(row, str):
        if len(row) != v or set(row) - {"0", "1"}:
            raise DimensionMismatchError(f"row '{row}' is not a 0/1 string of length {v}")
        return int(row, 2)
    if row < 0 or row >> v:
        raise DimensionMismatchError(f"row {row:b} does not fit in length {v}")
    return row


def _pivot_table(rows: Iterable[int]) -> dict:
    """
    Gaussian elimination keyed by leading bit.

    @param rows: Vectors as ints.
    @returns dict mapping leading bit -> echelon row with that leading bit.
    """
    pivots = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead in pivots:
                r ^= pivots[lead]
            else:
                pivots[lead] = r
                break
    return pivots


def gf2_rank(rows: Iterable[int]) -> int:
    """
    Rank over F_2 of a list of bit-vectors.

    @param rows: Vectors as ints.
    @returns The dimension of their span.
    """
    return len(_pivot_table(rows))


def _reduced_echelon(rows: Iterable[int]) -> Tuple[int, ...]:
    pivots = _pivot_table(rows)
    basis = [pivots[lead] for lead in sorted(pivots, reverse=True)]
    # clear each pivot column from the rows above it, smallest pivot first
    for j in reversed(range(len(basis))):
        lead = basis[j].bit_length() - 1
        for i in range(j):
            if basis[i] >> lead & 1:
                basis[i] ^= basis[j]
    return tuple(basis)


def canonicalize(raw_rows: Iterable[RawRow], v: int) -> Subspace:
    """
    Returns the canonical representative of the row space of raw_rows.

    Zero rows are discarded; the result is the unique reduced row-echelon basis.

    @param raw_rows: Rows as ints or strings over {0,1}, each of length v.
    @param v: Ambient dimension (at most MAX_AMBIENT_DIM).
    @returns The canonical Subspace.
    """
    if not 0 <= v <= MAX_AMBIENT_DIM:
        raise DimensionMismatchError(f"ambient dimension {v} outside 0..{MAX_AMBIENT_DIM}")
    return Subspace(v, _reduced_echelon(_to_int(r, v) for r in raw_rows))


def join(U: Subspace, V: Subspace) -> Subspace:
    """@returns The sum U + V."""
    _check_same_ambient(U, V)
    return Subspace(U.v, _reduced_echelon(U.rows + V.rows))


def orthogonal_complement(U: Subspace) -> Subspace:
    """
    The orthogonal complement with respect to the standard dot product over F_2.

    For every free column f the vector with a 1 at f and, at each pivot column p_i,
    the entry of row i in column f, is orthogonal to all rows.

    @param U: Any subspace.
    @returns U-perp, of dimension v - dim U.
    """
    v = U.v
    pivot_bits = [row.bit_length() - 1 for row in U.rows]
    pivot_set = set(pivot_bits)
    vectors = []
    for bit in range(v - 1, -1, -1):
        if bit in pivot_set:
            continue
        vec = 1 << bit
        for row, pivot in zip(U.rows, pivot_bits):
            if row >> bit & 1:
                vec |= 1 << pivot
        vectors.append(vec)
    return Subspace(v, _reduced_echelon(vectors))


def meet_join_dims(U: Subspace, V: Subspace) -> Tuple[int, int, Subspace]:
    """
    Dimensions of U + V and U ∩ V, and the canonical meet.

    The meet is computed as (U-perp + V-perp)-perp.

    @param U: First subspace.
    @param V: Second subspace, same ambient dimension.
    @returns (dim(U+V), dim(U∩V), U∩V).
    """
    _check_same_ambient(U, V)
    dim_sum = gf2_rank(U.rows + V.rows)
    dim_meet = U.dim + V.dim - dim_sum
    meet = orthogonal_complement(join(orthogonal_complement(U), orthogonal_complement(V)))
    return dim_sum, dim_meet, meet


def meet_dim(U: Subspace, V: Subspace) -> int:
    """@returns dim(U ∩ V) without building the meet."""
    _check_same_ambient(U, V)
    return U.dim + V.dim - gf2_rank(U.rows + V.rows)


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """
    sdist(U, V) = dim(U+V) - dim(U∩V) = 2 dim(U+V) - dim U - dim V.

    @param U: First subspace.
    @param V: Second subspace, same ambient dimension.
    @returns The subspace distance.
    """
    _check_same_ambient(U, V)
    return 2 * gf2_rank(U.rows + V.rows) - U.dim - V.dim


def lines_in(U: Subspace) -> frozenset:
    """
    All 2-dimensional subspaces of U.

    @param U: A subspace of dimension at least 2.
    @returns frozenset of canonical lines.
    """
    pts = sorted(U.points())
    return frozenset(Subspace.line(x, y, U.v) for i, x in enumerate(pts) for y in pts[i + 1:])
