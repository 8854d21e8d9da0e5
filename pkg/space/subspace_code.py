# -------------------------------------------------
# Constant-dimension subspace codes: declared parameters plus an
# ordered tuple of distinct codewords.
# -------------------------------------------------

from dataclasses import dataclass, field
from typing import Iterable, Tuple
from helpers.errors import DimensionMismatchError, InvalidConstructionError
from space.subspace import Subspace, orthogonal_complement


@dataclass(frozen=True)
class CodeParams:
    """
    Parameters (q, v, k, d) of a constant-dimension code.
    delta = d/2 and t = k - delta + 1 (every t-subspace lies in at most one codeword).
    """
    v: int
    k: int
    d: int
    q: int = 2

    def __post_init__(self):
        if self.q != 2:
            raise InvalidConstructionError(f"only binary codes are supported, got q={self.q}")
        if self.d < 2 or self.d % 2:
            raise InvalidConstructionError(f"minimum distance must be even and at least 2, got {self.d}")
        if not 0 < self.k < self.v:
            raise InvalidConstructionError(f"need 0 < k < v, got k={self.k} v={self.v}")

    @property
    def delta(self) -> int:
        return self.d // 2

    @property
    def t(self) -> int:
        return self.k - self.delta + 1

    def dual(self) -> "CodeParams":
        return CodeParams(self.v, self.v - self.k, self.d, self.q)


@dataclass(frozen=True)
class SubspaceCode:
    """
    A (v, M, d; k) code. The distance d is a claim until the verifier certifies it.
    """
    params: CodeParams
    words: Tuple[Subspace, ...]
    provenance: str = field(default="")

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        for w in self.words:
            if w.v != self.params.v or w.dim != self.params.k:
                raise DimensionMismatchError(
                    f"codeword of dim {w.dim} in F_2^{w.v} does not fit parameters "
                    f"v={self.params.v} k={self.params.k}")
        if len(set(self.words)) != len(self.words):
            raise InvalidConstructionError("codewords are not distinct")

    @classmethod
    def fromWords(cls, words: Iterable[Subspace], d: int, provenance: str = "") -> "SubspaceCode":
        """
        Builds a code reading v and k off the first word.

        @param words: Non-empty iterable of equal-dimension subspaces.
        @param d: Claimed minimum distance.
        @param provenance: Construction tag.
        """
        words = tuple(words)
        if not words:
            raise InvalidConstructionError("cannot infer parameters of an empty code")
        return cls(CodeParams(words[0].v, words[0].dim, d), words, provenance)

    @property
    def size(self) -> int:
        return len(self.words)

    def dual(self) -> "SubspaceCode":
        """
        U -> U-perp applied to every codeword; preserves the subspace distance.

        @returns The (v, M, d; v-k) dual code tagged '<provenance>+dual'.
        """
        return SubspaceCode(self.params.dual(),
                            tuple(orthogonal_complement(w) for w in self.words),
                            f"{self.provenance}+dual")

    def extended(self, extra: Iterable[Subspace], provenance: str) -> "SubspaceCode":
        """@returns A new code with extra words appended."""
        return SubspaceCode(self.params, self.words + tuple(extra), provenance)

    def without(self, removed: Iterable[Subspace], provenance: str) -> "SubspaceCode":
        """@returns A new code with the given words dropped, order otherwise kept."""
        drop = set(removed)
        return SubspaceCode(self.params, tuple(w for w in self.words if w not in drop), provenance)

    def __len__(self) -> int:
        return len(self.words)
