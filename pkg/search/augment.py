# -------------------------------------------------
# Augmenting a (v, M, 4; 3) code by planes that meet the special solid
# in a line or lie inside it. Compatibility of planes is "no common line",
# tracked with one bit per line of PG(6,2).
# -------------------------------------------------

import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from geometry.packing import LinePacking
from geometry.solid import point, special_solid
from graph.compat_graph import CompatGraph
from helpers.errors import InvalidConstructionError, SearchBudgetExceeded
from search.clique import max_clique
from space.subspace import Subspace, join, lines_in
from space.subspace_code import SubspaceCode

logger = logging.getLogger(__name__)

STRATEGIES = ("exact", "greedy-randomized")
SEED_MASK = (1 << 64) - 1
SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class SearchConfig:
    """Settings of the augmentation searches; derived from the run configuration."""
    seed: int = 1
    restarts: int = 1000
    time_budget: Optional[float] = None
    strategy: str = "greedy-randomized"
    resample_choice: bool = True
    target_size: Optional[int] = None
    progress: bool = False

    def __post_init__(self):
        if self.restarts < 1:
            raise InvalidConstructionError(f"restarts must be at least 1, got {self.restarts}")
        if self.strategy not in STRATEGIES:
            raise InvalidConstructionError(f"unknown strategy '{self.strategy}'")

    def restartSeed(self, i: int) -> int:
        """@returns The seed of restart i, derived from the base seed."""
        return (self.seed * SEED_STRIDE + i) & SEED_MASK


class LineIndex:
    """Assigns one bit to every line seen, so that planes become line masks."""

    def __init__(self):
        self.ids: Dict[Subspace, int] = {}

    def mask(self, U: Subspace) -> int:
        m = 0
        for line in lines_in(U):
            bit = self.ids.setdefault(line, len(self.ids))
            m |= 1 << bit
        return m


def line_meeting_planes(S: Subspace = None, include_in_S: bool = True) -> List[Subspace]:
    """
    All planes P with dim(P ∩ S) = 2, plus the planes inside S if requested,
    ordered by the line P ∩ S and then by P.
    """
    S = special_solid() if S is None else S
    v = S.v
    outside = [x for x in range(1, 1 << v) if not S.contains(x)]
    keyed = set()
    for L in sorted(lines_in(S)):
        for p in outside:
            keyed.add((L, join(L, Subspace(v, (p,)))))
    if include_in_S:
        for p in sorted(_planes_in(S)):
            keyed.add((p, p))
    return [plane for _, plane in sorted(keyed)]


def _planes_in(S: Subspace) -> set:
    pts = sorted(S.points())
    planes = set()
    for L in lines_in(S):
        for p in pts:
            if not L.contains(p):
                planes.add(join(L, Subspace(S.v, (p,))))
    return planes


class AugmentationPool:
    """
    A fixed list of candidate planes with their compatibility graph. Codes are
    matched against the pool through line masks, so per-code work is one OR per word.
    """

    def __init__(self, planes: Sequence[Subspace]):
        self.planes = list(planes)
        self.lines = LineIndex()
        self.masks = [self.lines.mask(p) for p in self.planes]
        self.graph = CompatGraph.fromMasks(self.planes, self.masks)
        self._word_cache: Dict[Subspace, int] = {}
        logger.info("augmentation pool: %d planes, %d edges", len(self.planes), self.graph.edgeCount())

    def _conflicts(self, word: Subspace) -> int:
        """Pool planes sharing a line with word, as a vertex bitmask."""
        if word not in self._word_cache:
            m = self.lines.mask(word)
            conflict = 0
            for i, pm in enumerate(self.masks):
                if pm & m:
                    conflict |= 1 << i
            self._word_cache[word] = conflict
        return self._word_cache[word]

    def allowedMask(self, words: Iterable[Subspace]) -> int:
        """@returns The pool vertices compatible with every given word."""
        blocked = 0
        for w in words:
            blocked |= self._conflicts(w)
        return ((1 << len(self.planes)) - 1) & ~blocked

    def allowed(self, words: Iterable[Subspace]) -> List[int]:
        mask = self.allowedMask(words)
        return [i for i in range(len(self.planes)) if mask >> i & 1]


_POOL_CACHE: Dict[Tuple[Subspace, bool], AugmentationPool] = {}


def line_meeting_pool(S: Subspace = None, include_in_S: bool = True) -> AugmentationPool:
    """
    The pool of planes meeting S in a line (and optionally lying in S), built once per S.
    Restricting it to a base code is done with AugmentationPool.allowed.
    """
    S = special_solid() if S is None else S
    key = (S, include_in_S)
    if key not in _POOL_CACHE:
        _POOL_CACHE[key] = AugmentationPool(line_meeting_planes(S, include_in_S))
    return _POOL_CACHE[key]


def plane_graph(planes: Sequence, base: SubspaceCode = None) -> CompatGraph:
    """
    Compatibility graph of planes: planes sharing a line with a base codeword are dropped,
    the rest are adjacent iff they share no line (subspace distance at least 4).

    @param planes: Subspaces or NewPlanes (anything with a .plane is unwrapped).
    @param base: Optional code the planes must be compatible with.
    @returns CompatGraph whose labels are the surviving input items.
    """
    index = LineIndex()
    blocked = 0
    if base is not None:
        for w in base.words:
            blocked |= index.mask(w)
    labels, masks = [], []
    for item in planes:
        plane = getattr(item, "plane", item)
        if plane.dim != 3:
            raise InvalidConstructionError(f"plane_graph needs planes, got dimension {plane.dim}")
        m = index.mask(plane)
        if m & blocked:
            continue
        labels.append(item)
        masks.append(m)
    return CompatGraph.fromMasks(labels, masks)


def packing_anchors(base: SubspaceCode, packing: LinePacking, S: Subspace = None) -> Optional[List[Subspace]]:
    """
    Anchor points p_i for which the 35 planes <p_i, L>, L in spread i, avoid every line of base.

    Each spread tries the seven 4-flats through S; inside a flat the first point x + s
    (s = 0, then the points of S in increasing order) whose five planes are all free is kept.
    Spreads are then matched to distinct flats by backtracking in spread order.

    @param base: The code to augment.
    @param packing: Line packing of PG(3,2), embedded into S.
    @param S: The special solid.
    @returns Seven points in spread order, or None if no matching exists.
    """
    S = special_solid() if S is None else S
    v = S.v
    index = LineIndex()
    blocked = 0
    for w in base.words:
        blocked |= index.mask(w)
    shifts = [0] + sorted(S.points())
    flats = [r << S.dim for r in range(1, 1 << (v - S.dim))]
    options: List[Dict[int, Subspace]] = []
    for spread in packing.spreads:
        lines = [line.embed(v) for line in spread]
        found = {}
        for flat in flats:
            for s in shifts:
                p = point(flat ^ s, v)
                if not any(index.mask(join(p, line)) & blocked for line in lines):
                    found[flat] = p
                    break
        options.append(found)
    logger.debug("flats usable per spread: %s", [len(o) for o in options])

    chosen: List[Subspace] = []
    used = set()

    def assign(i: int) -> bool:
        if i == len(options):
            return True
        for flat, p in options[i].items():
            if flat not in used:
                used.add(flat)
                chosen.append(p)
                if assign(i + 1):
                    return True
                used.discard(flat)
                chosen.pop()
        return False

    if not assign(0):
        return None
    return chosen


def greedy_pass(graph: CompatGraph, allowed: int, rng: random.Random) -> List[int]:
    """
    One randomized greedy pass: visits the allowed vertices in shuffled order and keeps
    each one adjacent to everything kept so far. The result is a maximal clique of the
    allowed subgraph.
    """
    order = [i for i in range(graph.n) if allowed >> i & 1]
    rng.shuffle(order)
    chosen = []
    candidates = allowed
    for v in order:
        if candidates >> v & 1:
            chosen.append(v)
            candidates &= graph.adjacency[v]
    return sorted(chosen)


@dataclass(frozen=True)
class AugmentResult:
    added: Tuple[Subspace, ...]
    final: SubspaceCode
    restarts_run: int = 0
    best_restart: int = 0
    histogram: Dict[int, int] = field(default_factory=dict)


def _finish(base: SubspaceCode, pool: AugmentationPool, chosen: Sequence[int], provenance: str,
            restarts_run: int = 0, best_restart: int = 0, histogram: Dict[int, int] = None) -> AugmentResult:
    added = tuple(pool.planes[i] for i in chosen)
    final = base.extended(added, provenance)
    return AugmentResult(added, final, restarts_run, best_restart, dict(histogram or {}))


def exact_augment(base: SubspaceCode, pool: AugmentationPool = None, time_budget: Optional[float] = None,
                  provenance: str = None) -> AugmentResult:
    """
    Adds a maximum compatible set of pool planes, found by exact clique search.

    On budget exhaustion the SearchBudgetExceeded carries the best partial AugmentResult.
    """
    pool = pool or line_meeting_pool()
    allowed = pool.allowed(base.words)
    sub = pool.graph.induced(allowed)
    provenance = provenance or f"{base.provenance}+exact"
    # pool order groups planes by their line in S, which keeps the colouring bound tight
    start = greedy_pass(sub, (1 << sub.n) - 1, random.Random(0))
    try:
        size, witness = max_clique(sub, time_budget, initial=start, reorder=False)
    except SearchBudgetExceeded as e:
        _, witness = e.best
        raise SearchBudgetExceeded(str(e), best=_finish(base, pool, [allowed[i] for i in witness], provenance))
    logger.info("exact augmentation adds %d planes to %d", size, base.size)
    return _finish(base, pool, [allowed[i] for i in witness], provenance)


def attainment_statistics(added_counts: Iterable[int]) -> Dict[int, int]:
    """@returns Histogram {number of added planes: how often}, keys increasing."""
    return dict(sorted(Counter(added_counts).items()))


def randomized_augment(base: SubspaceCode, config: SearchConfig,
                       pool: AugmentationPool = None) -> AugmentResult:
    """
    Seeded greedy-with-restarts augmentation of base by pool planes.

    Restart i shuffles with random.Random(config.restartSeed(i)); the largest result wins,
    ties going to the earliest restart. Stops early once target_size is reached.
    With strategy "exact" the search is delegated to exact_augment.

    @returns AugmentResult; SearchBudgetExceeded if the budget runs out before any restart.
    """
    pool = pool or line_meeting_pool()
    if config.strategy == "exact":
        return exact_augment(base, pool, config.time_budget)
    deadline = None if config.time_budget is None else time.monotonic() + config.time_budget
    allowed = pool.allowedMask(base.words)
    best: Optional[List[int]] = None
    best_restart = 0
    counts = []
    for i in tqdm(range(config.restarts), desc="restarts", disable=not config.progress):
        if deadline is not None and time.monotonic() > deadline:
            break
        chosen = greedy_pass(pool.graph, allowed, random.Random(config.restartSeed(i)))
        counts.append(len(chosen))
        if best is None or len(chosen) > len(best):
            best, best_restart = chosen, i
            logger.info("restart %d: %d planes added", i, len(chosen))
        if config.target_size is not None and base.size + len(best) >= config.target_size:
            break
    if best is None:
        raise SearchBudgetExceeded("time budget exhausted before the first restart finished")
    return _finish(base, pool, best, f"{base.provenance}+greedy", len(counts), best_restart,
                   attainment_statistics(counts))
