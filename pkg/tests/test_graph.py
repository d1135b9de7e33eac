import pickle

import pytest

from reebsphere.errors import InvalidGraph, InvalidVertex
from reebsphere.generators import complete_graph, cycle_graph, octahedron, path_graph, wheel_graph
from reebsphere.graph import (
    Graph,
    complement,
    connected_components,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    fresh_vertex,
    induced_subgraph,
    is_complete,
    is_connected,
    join,
    relabel,
    unit_ball,
    unit_sphere,
    vertex_key,
)


def test_vertices_sorted_ints_strings_tuples():
    g = Graph([("a", 1), "b", 3, 1, "a", (0,)])
    assert g.vertices == (1, 3, "a", "b", (0,), ("a", 1))


def test_bool_vertices_rejected():
    with pytest.raises(InvalidGraph):
        vertex_key(True)
    with pytest.raises(InvalidGraph):
        Graph([1.5])


def test_self_loop_and_unknown_endpoint_rejected():
    with pytest.raises(InvalidGraph):
        Graph([1], [(1, 1)])
    with pytest.raises(InvalidVertex):
        Graph([1], [(1, 2)])
    with pytest.raises(InvalidGraph):
        Graph([1, 2], [(1, 2, 3)])


def test_edges_are_sorted_pairs():
    g = Graph([2, 1, 0], [(2, 1), (0, 2)])
    assert g.edges() == [(0, 2), (1, 2)]
    assert g.number_of_edges() == 2
    assert g.has_edge(1, 2) and g.has_edge(2, 1) and not g.has_edge(0, 1)


def test_equality_hash_and_pickle():
    g = cycle_graph(5)
    h = Graph(range(5), [(4, 0), (0, 1), (1, 2), (2, 3), (3, 4)])
    assert g == h and hash(g) == hash(h)
    assert pickle.loads(pickle.dumps(g)) == g
    assert g != path_graph(5)


def test_unit_sphere_of_wheel_hub_is_rim_cycle():
    w = wheel_graph(5)
    assert unit_sphere(w, 0) == Graph(range(1, 6), [(i, i % 5 + 1) for i in range(1, 6)])
    assert set(unit_ball(w, 1).vertices) == {0, 1, 2, 5}


def test_unknown_vertex_errors():
    g = path_graph(3)
    with pytest.raises(InvalidVertex):
        g.neighbors(7)
    with pytest.raises(InvalidVertex):
        unit_sphere(g, 7)
    with pytest.raises(InvalidVertex):
        induced_subgraph(g, [0, 9])
    with pytest.raises(InvalidVertex):
        delete_vertex(g, 9)
    assert isinstance(InvalidVertex(1), KeyError)


def test_delete_and_induced():
    g = octahedron()
    h = delete_vertex(g, 0)
    assert len(h) == 5 and h.number_of_edges() == 8
    assert delete_vertices(g, [0, 1]) == induced_subgraph(g, range(2, 6))


def test_join_counts_and_tags():
    a, b = path_graph(2), Graph(["x"])
    j = join(a, b)
    assert j.vertices == (("L", 0), ("L", 1), ("R", "x"))
    assert j.number_of_edges() == 3
    assert is_complete(j)


def test_disjoint_union_and_components():
    u = disjoint_union(cycle_graph(3), path_graph(2))
    comps = connected_components(u)
    assert [len(c) for c in comps] == [3, 2]
    assert not is_connected(u) and is_connected(comps[0])
    assert not is_connected(Graph())


def test_complement_of_complete_is_empty_of_edges():
    assert complement(complete_graph(4)).number_of_edges() == 0
    assert complement(complement(octahedron())) == octahedron()


def test_relabel_must_be_injective():
    with pytest.raises(InvalidGraph):
        relabel(path_graph(2), {0: "a", 1: "a"})
    assert relabel(path_graph(2), {0: "a", 1: "b"}).edges() == [("a", "b")]


def test_fresh_vertex():
    g = Graph([("mid", 0), ("mid", 1)])
    assert fresh_vertex(g, "mid") == ("mid", 2)
