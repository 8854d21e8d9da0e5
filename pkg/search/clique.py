# -------------------------------------------------
# Exact maximum clique search: bitset branch and bound with greedy
# colouring bounds over the CompatGraph bit rows.
# -------------------------------------------------

import logging
import time
from typing import List, Optional, Sequence, Tuple

from graph.compat_graph import CompatGraph
from helpers.errors import SearchBudgetExceeded, VerificationError

logger = logging.getLogger(__name__)

DEADLINE_CHECK_INTERVAL = 1024


class _CliqueSearch:
    """
    One branch-and-bound run. Vertices are renumbered by decreasing degree (ties by id)
    unless the caller already ordered them, e.g. in groups of mutually incompatible items.
    """

    def __init__(self, g: CompatGraph, enumerate_all: bool, time_budget: Optional[float],
                 reorder: bool = True):
        self.g = g
        self.enumerate_all = enumerate_all
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        if reorder:
            self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        else:
            self.order = list(range(g.n))
        position = {v: i for i, v in enumerate(self.order)}
        self.adj = []
        for v in self.order:
            row = 0
            for u in g.neighbours(v):
                row |= 1 << position[u]
            self.adj.append(row)
        self.best: List[int] = []
        self.best_size = 0
        self.found: List[List[int]] = []
        self.nodes = 0

    def _colour_sort(self, P: int) -> Tuple[List[int], List[int]]:
        """Greedy sequential colouring: vertices of P with nondecreasing colour numbers."""
        order, colours = [], []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~self.adj[v] & ~low
                U &= ~low
                order.append(v)
                colours.append(k)
        return order, colours

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % DEADLINE_CHECK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise SearchBudgetExceeded(
                    f"clique search stopped after {self.nodes} nodes",
                    best=(self.best_size, self._original(self.best)))

    def _record(self, clique: List[int], extendable: bool):
        size = len(clique)
        if self.enumerate_all:
            if extendable:
                return
            if size > self.best_size:
                self.best_size = size
                self.best = list(clique)
                self.found = [list(clique)]
            elif size == self.best_size:
                self.found.append(list(clique))
        elif size > self.best_size:
            self.best_size = size
            self.best = list(clique)

    def expand(self, clique: List[int], P: int):
        self._tick()
        order, colours = self._colour_sort(P)
        for idx in range(len(order) - 1, -1, -1):
            bound = len(clique) + colours[idx]
            if bound < self.best_size or (bound == self.best_size and not self.enumerate_all):
                return
            v = order[idx]
            clique.append(v)
            new_P = P & self.adj[v]
            self._record(clique, extendable=bool(new_P))
            if new_P:
                self.expand(clique, new_P)
            clique.pop()
            P &= ~(1 << v)

    def _original(self, clique: Sequence[int]) -> List[int]:
        return sorted(self.order[v] for v in clique)

    def run(self, initial: Sequence[int] = ()):
        if initial:
            if not self.g.isClique(initial):
                raise VerificationError(f"initial vertex set {list(initial)} is not a clique")
            position = {v: i for i, v in enumerate(self.order)}
            self.best = [position[v] for v in initial]
            self.best_size = len(self.best)
            if self.enumerate_all:
                self.found = []
        if self.g.n:
            self.expand([], (1 << self.g.n) - 1)
        logger.debug("clique search visited %d nodes, best size %d", self.nodes, self.best_size)


def _check_witness(g: CompatGraph, witness: Sequence[int], size: int):
    if len(witness) != size or not g.isClique(witness):
        raise VerificationError(f"search returned a non-clique {list(witness)}")


def max_clique(g: CompatGraph, time_budget: Optional[float] = None,
               initial: Sequence[int] = (), reorder: bool = True) -> Tuple[int, List[int]]:
    """
    Exact maximum clique.

    @param g: The graph.
    @param time_budget: Seconds before SearchBudgetExceeded is raised (None = unlimited);
                        the exception carries (size, witness) of the best clique so far.
    @param initial: Optional known clique used as the starting lower bound.
    @param reorder: Renumber by decreasing degree; False keeps the given vertex order.
    @returns (size, sorted witness vertex ids).
    """
    search = _CliqueSearch(g, enumerate_all=False, time_budget=time_budget, reorder=reorder)
    search.run(initial)
    witness = search._original(search.best)
    _check_witness(g, witness, search.best_size)
    return search.best_size, witness


def enumerate_max_cliques(g: CompatGraph, time_budget: Optional[float] = None) -> List[Tuple[int, ...]]:
    """
    All cliques of maximum size, each listed once, in lexicographic order of sorted ids.

    @param g: The graph.
    @param time_budget: As for max_clique.
    @returns List of sorted id tuples (a single empty tuple for the empty graph).
    """
    if g.n == 0:
        return [()]
    search = _CliqueSearch(g, enumerate_all=True, time_budget=time_budget)
    search.run()
    cliques = sorted(tuple(search._original(c)) for c in search.found)
    for c in cliques:
        _check_witness(g, c, search.best_size)
    return cliques
