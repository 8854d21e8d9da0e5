# -------------------------------------------------
# Compatibility graph with one adjacency bit row per vertex.
# Row i is an int whose bit j is set iff i and j are adjacent.
# -------------------------------------------------

import logging
from typing import Any, Callable, Iterable, List, Sequence

import networkx as nx

from graph.graph import Graph

logger = logging.getLogger(__name__)


class CompatGraph(Graph):
    """
    Undirected graph without self-loops stored as adjacency bit rows.
    Vertex i carries labels[i].
    """

    def __init__(self, labels: Iterable[Any] = ()):
        """
        Initializes the graph with the given vertices and no edges.

        @param labels: Vertex payloads in id order.
        """
        self.labels: List[Any] = []
        self.adjacency: List[int] = []
        self.addVertices(list(labels))

    @classmethod
    def fromPredicate(cls, labels: Sequence[Any], compatible: Callable[[Any, Any], bool]) -> "CompatGraph":
        """
        Builds the graph whose edges are the pairs i < j with compatible(labels[i], labels[j]).

        @param labels: Vertex payloads.
        @param compatible: Symmetric predicate on payloads.
        """
        g = cls(labels)
        for i in range(g.n):
            for j in range(i + 1, g.n):
                if compatible(g.labels[i], g.labels[j]):
                    g.addEdge(i, j)
        logger.debug("built graph with %d vertices and %d edges", g.n, g.edgeCount())
        return g

    @classmethod
    def fromMasks(cls, labels: Sequence[Any], conflict_masks: Sequence[int]) -> "CompatGraph":
        """
        Builds the graph in which i and j are adjacent iff their conflict masks are disjoint.

        @param labels: Vertex payloads.
        @param conflict_masks: One int per vertex; a shared set bit means incompatible.
        """
        g = cls(labels)
        for i in range(g.n):
            mi = conflict_masks[i]
            row = 0
            for j in range(g.n):
                if j != i and not mi & conflict_masks[j]:
                    row |= 1 << j
            g.adjacency[i] = row
        return g

    @property
    def n(self) -> int:
        return len(self.labels)

    def addVertex(self, label: Any) -> int:
        self.labels.append(label)
        self.adjacency.append(0)
        return len(self.labels) - 1

    def addVertices(self, vertLabels: List[Any]) -> List[int]:
        return [self.addVertex(label) for label in vertLabels]

    def addEdge(self, vert1: int, vert2: int) -> bool:
        """
        Adds an edge if:
        1) both vertices are in the graph,
        2) they are different,
        3) no edge exists yet.

        @returns True if edge added successfully, otherwise False.
        """
        if not self.hasVertex(vert1) or not self.hasVertex(vert2):
            return False
        if vert1 == vert2:
            return False
        if self.hasEdge(vert1, vert2):
            return False
        self.adjacency[vert1] |= 1 << vert2
        self.adjacency[vert2] |= 1 << vert1
        return True

    def removeEdge(self, vert1: int, vert2: int) -> bool:
        if not self.hasEdge(vert1, vert2):
            return False
        self.adjacency[vert1] &= ~(1 << vert2)
        self.adjacency[vert2] &= ~(1 << vert1)
        return True

    def hasVertex(self, vert: int) -> bool:
        return 0 <= vert < self.n

    def hasEdge(self, vert1: int, vert2: int) -> bool:
        if self.hasVertex(vert1) and self.hasVertex(vert2):
            return bool(self.adjacency[vert1] >> vert2 & 1)
        return False

    def getLabel(self, vert: int) -> Any:
        return self.labels[vert]

    def getVertices(self) -> List[int]:
        return list(range(self.n))

    def neighbours(self, vert: int) -> List[int]:
        if not self.hasVertex(vert):
            return []
        row = self.adjacency[vert]
        return [j for j in range(self.n) if row >> j & 1]

    def degree(self, vert: int) -> int:
        return self.adjacency[vert].bit_count()

    def edgeCount(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def isClique(self, verts: Iterable[int]) -> bool:
        """@returns True if the vertices are pairwise adjacent (and distinct)."""
        verts = list(verts)
        if len(set(verts)) != len(verts) or not all(self.hasVertex(v) for v in verts):
            return False
        mask = 0
        for v in verts:
            mask |= 1 << v
        return all((self.adjacency[v] | (1 << v)) & mask == mask for v in verts)

    def induced(self, verts: Sequence[int]) -> "CompatGraph":
        """@returns The subgraph on verts, renumbered 0..len(verts)-1 in the given order."""
        sub = CompatGraph(self.labels[v] for v in verts)
        for a, va in enumerate(verts):
            for b in range(a + 1, len(verts)):
                if self.hasEdge(va, verts[b]):
                    sub.addEdge(a, b)
        return sub

    def toNetworkx(self) -> nx.Graph:
        """@returns An equivalent networkx graph on the vertex ids."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((i, j) for i in range(self.n) for j in self.neighbours(i) if i < j)
        return g

    def print(self):
        """
        Prints the adjacency rows of the graph to the terminal, one 0/1 string per vertex,
        with the vertex payload alongside.

        Also validates that the rows are symmetric and loop free.
        """
        print("Adjacency Rows:")
        for i in range(self.n):
            row = "".join("1" if self.hasEdge(i, j) else "0" for j in range(self.n))
            print(f"{i:>5} {row}  {self.labels[i]}")
            if self.adjacency[i] >> i & 1:
                print(f"⚠️ Invalid self-loop at {i}")
            for j in self.neighbours(i):
                if not self.adjacency[j] >> i & 1:
                    print(f"⚠️ Invalid adjacency: {i} → {j} is not symmetric")
