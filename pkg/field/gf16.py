# -------------------------------------------------
# Arithmetic in GF(16) = F_2[a]/(a^4 + a + 1).
#
# An element is an int 0..15 whose bit i is the coefficient of a^i,
# which is also the integer representation galois uses. Tables are taken
# from galois and checked against shift-and-reduce multiplication on import.
# -------------------------------------------------

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import galois
import numpy as np

from helpers.errors import InvalidConstructionError, NotInSpanError

logger = logging.getLogger(__name__)

MODULUS = 0b10011  # a^4 + a + 1
ORDER = 16
ALPHA = 2

GF16 = galois.GF(2**4, irreducible_poly="x^4 + x + 1")

# frozen bases: W = <1, a, a^2> and GF(16) = <1, a, a^2, a^3>
W_BASIS: Tuple[int, ...] = (1, 2, 4)
F16_BASIS: Tuple[int, ...] = (1, 2, 4, 8)

# F_4 inside GF(16): {0, 1, a^5, a^10}
F4: Tuple[int, ...] = (0, 1, 6, 7)


def _shift_and_reduce(x: int, y: int) -> int:
    result = 0
    while y:
        if y & 1:
            result ^= x
        y >>= 1
        x <<= 1
        if x & 0b10000:
            x ^= MODULUS
    return result


def _build_tables():
    elems = GF16(np.arange(ORDER))
    table = (elems[:, np.newaxis] * elems[np.newaxis, :]).view(np.ndarray).astype(np.int64)
    for x in range(ORDER):
        for y in range(ORDER):
            if table[x, y] != _shift_and_reduce(x, y):
                raise InvalidConstructionError(
                    f"galois multiplication table disagrees at {x}*{y}: "
                    f"{table[x, y]} vs {_shift_and_reduce(x, y)}")
    mul_table = table.tolist()
    exp_table = [1]
    for _ in range(ORDER - 2):
        exp_table.append(mul_table[exp_table[-1]][ALPHA])
    if sorted(exp_table) != list(range(1, ORDER)):
        raise InvalidConstructionError("alpha is not primitive under the chosen modulus")
    log_table = {value: i for i, value in enumerate(exp_table)}
    return mul_table, exp_table, log_table


_MUL, _EXP, _LOG = _build_tables()


def add(x: int, y: int) -> int:
    return x ^ y


def mul(x: int, y: int) -> int:
    return _MUL[x][y]


def square(x: int) -> int:
    return _MUL[x][x]


def exp(i: int) -> int:
    """@returns a^i for any integer i."""
    return _EXP[i % (ORDER - 1)]


def log(x: int) -> int:
    """
    Discrete logarithm to base a.

    @param x: A nonzero element.
    @returns i in 0..14 with a^i = x.
    """
    if x == 0:
        raise ZeroDivisionError("log of zero in GF(16)")
    return _LOG[x]


def power(x: int, e: int) -> int:
    if x == 0:
        return 1 if e == 0 else 0
    return exp(log(x) * e)


def inverse(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("zero has no inverse in GF(16)")
    return exp(-log(x))


def trace(x: int) -> int:
    """
    Absolute trace x + x^2 + x^4 + x^8, which lies in {0, 1}.
    """
    x2 = square(x)
    x4 = square(x2)
    return x ^ x2 ^ x4 ^ square(x4)


def trace_zero_set() -> Tuple[int, ...]:
    """
    The 8 trace-zero elements W = {0, 1, a, a^2, a^4, a^5, a^8, a^10}, zero first
    and then by increasing exponent.
    """
    return (0,) + tuple(x for x in (exp(i) for i in range(ORDER - 1)) if trace(x) == 0)


def nonzero_elements() -> Tuple[int, ...]:
    return tuple(range(1, ORDER))


@dataclass(frozen=True, order=True, slots=True)
class LinPoly:
    """The linearized polynomial x -> a0*x + a1*x^2 over GF(16)."""
    a0: int
    a1: int

    def __add__(self, other: "LinPoly") -> "LinPoly":
        return LinPoly(self.a0 ^ other.a0, self.a1 ^ other.a1)

    def scaled(self, v: int) -> "LinPoly":
        """@returns The polynomial v * p(x)."""
        return LinPoly(mul(v, self.a0), mul(v, self.a1))

    def isZero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0

    def __repr__(self):
        return f"LinPoly({self.a0}, {self.a1})"


ZERO_POLY = LinPoly(0, 0)


def eval_linpoly(p: LinPoly, x: int) -> int:
    """@returns p.a0 * x + p.a1 * x^2."""
    return _MUL[p.a0][x] ^ _MUL[p.a1][_MUL[x][x]]


def coords(x: int, basis: Sequence[int]) -> int:
    """
    Coordinates of x with respect to an F_2-basis of a subspace of GF(16).

    The first basis element is the leftmost (most significant) coordinate.

    @param x: The element.
    @param basis: Ordered F_2-independent elements.
    @returns Bit-vector of length len(basis).
    """
    n = len(basis)
    span = {}
    for c in range(1 << n):
        value = 0
        for i, b in enumerate(basis):
            if c >> (n - 1 - i) & 1:
                value ^= b
        span.setdefault(value, c)
    if len(span) != 1 << n:
        raise InvalidConstructionError(f"basis {tuple(basis)} is not F_2-independent")
    if x not in span:
        raise NotInSpanError(f"{x} is not in the span of {tuple(basis)}")
    return span[x]


def _reverse_bits(x: int, width: int) -> int:
    return int(format(x, f"0{width}b")[::-1], 2)


_COORDS16 = [_reverse_bits(x, 4) for x in range(ORDER)]
_COORDS_W = [_reverse_bits(x, 3) for x in range(8)]


def coords16(x: int) -> int:
    """coords(x, F16_BASIS): bit-reversal of the 4-bit value."""
    return _COORDS16[x]


def coords_w(x: int) -> int:
    """coords(x, W_BASIS) for x in W (values 0..7)."""
    if not 0 <= x < 8:
        raise NotInSpanError(f"{x} is not in W")
    return _COORDS_W[x]


def point_vector(x: int, y: int) -> int:
    """
    The 7-bit vector of (x, y) in W x GF(16) under the ordered basis
    (1,0),(a,0),(a^2,0),(0,1),(0,a),(0,a^2),(0,a^3).
    """
    return (coords_w(x) << 4) | _COORDS16[y]


def split_vector(vector: int) -> Tuple[int, int]:
    """Inverse of point_vector."""
    return _COORDS_W[vector >> 4], _COORDS16[vector & 0xF]


# the linear permutation used by the orbit construction, given by its cycles on exponents:
# (0)(a^14)(1, a, a^2, a^4, a^5, a^10, a^8)(a^7, a^13, a^9, a^12, a^11, a^6, a^3)
SIGMA_CYCLES = ((0, 1, 2, 4, 5, 10, 8), (7, 13, 9, 12, 11, 6, 3))


def _build_sigma():
    table = list(range(ORDER))
    for cycle in SIGMA_CYCLES:
        for i, e in enumerate(cycle):
            table[exp(e)] = exp(cycle[(i + 1) % len(cycle)])
    return table


_SIGMA = _build_sigma()


def sigma(x: int, times: int = 1) -> int:
    """@returns sigma applied `times` times to x (sigma has order 7)."""
    for _ in range(times % 7):
        x = _SIGMA[x]
    return x


def check_sigma() -> bool:
    """
    Self-check of the transcribed permutation: it is a bijection, additive,
    fixes 0 and a^14, has order 7 and maps W onto W.

    @returns True, raising InvalidConstructionError on any failure.
    """
    if sorted(_SIGMA) != list(range(ORDER)):
        raise InvalidConstructionError("sigma is not a permutation")
    for x in range(ORDER):
        for y in range(ORDER):
            if _SIGMA[x ^ y] != _SIGMA[x] ^ _SIGMA[y]:
                raise InvalidConstructionError(f"sigma is not additive at ({x}, {y})")
    if _SIGMA[0] != 0 or _SIGMA[exp(14)] != exp(14):
        raise InvalidConstructionError("sigma does not fix 0 and a^14")
    orbit = list(range(ORDER))
    for _ in range(7):
        orbit = [_SIGMA[x] for x in orbit]
    if orbit != list(range(ORDER)):
        raise InvalidConstructionError("sigma does not have order 7")
    w = set(trace_zero_set())
    if {_SIGMA[x] for x in w} != w:
        raise InvalidConstructionError("sigma does not preserve W")
    logger.debug("sigma passed its self-check")
    return True
