# -------------------------------------------------
# Basic Tests for the bit-row CompatGraph implementation.
# -------------------------------------------------

from graph.compat_graph import CompatGraph
from graph.graph import Graph  # Base class


def build_test_graph():
    g = CompatGraph(["a", "b", "c", "d"])
    g.addEdge(0, 1)
    g.addEdge(1, 2)
    g.addEdge(2, 0)
    g.addEdge(2, 3)
    return g


def test_return_type():
    assert isinstance(build_test_graph(), Graph)


def test_add_edge_rules():
    g = build_test_graph()
    assert not g.addEdge(0, 1)
    assert not g.addEdge(3, 3)
    assert not g.addEdge(0, 7)
    assert g.hasEdge(1, 0) and g.hasEdge(0, 1)
    assert not g.hasEdge(0, 3)
    assert g.edgeCount() == 4
    assert g.removeEdge(2, 3)
    assert not g.removeEdge(2, 3)
    assert g.neighbours(3) == []


def test_vertices_and_labels():
    g = build_test_graph()
    assert g.getVertices() == [0, 1, 2, 3]
    assert g.getLabel(2) == "c"
    assert g.addVertex("e") == 4
    assert g.hasVertex(4) and not g.hasVertex(5)
    assert g.neighbours(2) == [0, 1, 3]
    assert g.degree(2) == 3
    assert g.neighbours(9) == []


def test_no_loops_and_symmetry():
    g = build_test_graph()
    for u in g.getVertices():
        assert u not in g.neighbours(u)
        assert all(u in g.neighbours(w) for w in g.neighbours(u))


def test_clique_check():
    g = build_test_graph()
    assert g.isClique([0, 1, 2])
    assert g.isClique([3])
    assert g.isClique([])
    assert not g.isClique([0, 1, 3])
    assert not g.isClique([0, 0])
    assert not g.isClique([0, 8])


def test_builders_agree():
    labels = [0b0011, 0b0100, 0b1000, 0b0110, 0b1001]
    by_masks = CompatGraph.fromMasks(labels, labels)
    by_predicate = CompatGraph.fromPredicate(labels, lambda a, b: not a & b)
    assert by_masks.adjacency == by_predicate.adjacency
    assert by_masks.hasEdge(0, 1) and not by_masks.hasEdge(0, 4)


def test_induced_and_networkx():
    g = build_test_graph()
    sub = g.induced([2, 3, 0])
    assert sub.labels == ["c", "d", "a"]
    assert sub.hasEdge(0, 1) and sub.hasEdge(0, 2) and not sub.hasEdge(1, 2)
    nxg = g.toNetworkx()
    assert nxg.number_of_nodes() == 4
    assert nxg.number_of_edges() == 4


def test_print(capsys):
    build_test_graph().print()
    out = capsys.readouterr().out
    assert out.startswith("Adjacency Rows:")
    assert "    2 1101  c" in out
    assert "⚠️" not in out


if __name__ == "__main__":
    test_return_type()
    test_add_edge_rules()
    test_vertices_and_labels()
    test_no_loops_and_symmetry()
    test_clique_check()
    test_builders_agree()
    test_induced_and_networkx()
