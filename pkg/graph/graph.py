# -------------------------------------------------
# Base class for the undirected graphs used by the searches.
# Vertices are integer ids 0..n-1, each carrying a payload label
# (a coset, a new plane or a subspace).
# -------------------------------------------------


from typing import Any, List


class Graph:
    """
    Base class for a compatibility graph.
    Each vertex is a search item identified by its integer id.
    Each edge means the two items can be used together.
    """

    def print(self):
        """
        prints the structure to terminal
        """
        pass

    def addVertex(self, label: Any) -> int:
        """
        Adds an item to the graph.

        @param label: The payload of the new vertex.

        @returns The id of the new vertex.
        """
        pass

    def addVertices(self, vertLabels: List[Any]) -> List[int]:
        """
        Adds multiple items to the graph.

        @param vertLabels: Payloads, in id order.

        @returns The ids of the new vertices.
        """
        pass

    def addEdge(self, vert1: int, vert2: int) -> bool:
        """
        Marks two items as jointly usable.

        @param vert1: First vertex id.
        @param vert2: Second vertex id.

        @returns True if edge is successfully added, otherwise False.
        """
        pass

    def removeEdge(self, vert1: int, vert2: int) -> bool:
        """
        Removes the edge between two vertices.

        @returns True if edge is successfully removed, otherwise False.
        """
        pass

    def hasVertex(self, vert: int) -> bool:
        """
        @returns True if the vertex id exists, otherwise False.
        """
        pass

    def hasEdge(self, vert1: int, vert2: int) -> bool:
        """
        @returns True if the two vertices are adjacent, otherwise False.
        """
        pass

    def getLabel(self, vert: int) -> Any:
        """
        @returns The payload of a vertex.
        """
        pass

    def getVertices(self) -> List[int]:
        """
        Returns all vertex ids in the graph.

        @returns List of ids.
        """
        pass

    def neighbours(self, vert: int) -> List[int]:
        """
        Retrieves all vertices adjacent to vert.

        @param vert: Vertex id.

        @returns List of adjacent ids in increasing order.
        """
        pass
