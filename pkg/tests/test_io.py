import json
from fractions import Fraction

import pytest

from conftest import fx
from reebsphere.errors import InvalidGraph, InvalidVertex
from reebsphere.fixtures import fixture_names
from reebsphere.generators import octahedron, path_graph
from reebsphere.graph import Graph
from reebsphere.io import (
    ParseError,
    coloring_to_json,
    coloring_values_from_json,
    dumps_graph,
    format_rational,
    graph_from_json,
    graph_to_json,
    loads_graph,
    parse_rational,
    to_dot,
    vertex_token,
)


@pytest.mark.parametrize("name", fixture_names())
def test_graph_json_round_trip(name):
    g = fx(name)
    assert loads_graph(dumps_graph(g)) == g
    assert dumps_graph(loads_graph(dumps_graph(g))) == dumps_graph(g)


def test_graph_json_shape():
    g = Graph([1, ("a", 2)], [(1, ("a", 2))])
    assert graph_to_json(g) == {"vertices": [1, ["a", 2]], "edges": [[1, ["a", 2]]]}


def test_malformed_json_reports_line_and_column():
    with pytest.raises(ParseError) as exc:
        loads_graph('{"vertices": [1, 2],\n "edges": [[1 2]]}')
    assert exc.value.line == 2 and exc.value.column > 1


@pytest.mark.parametrize(
    "obj,err",
    [
        ({"vertices": [1, 1], "edges": []}, InvalidGraph),
        ({"vertices": [1, 2], "edges": [[1, 2], [2, 1]]}, InvalidGraph),
        ({"vertices": [1], "edges": [[1, 1]]}, InvalidGraph),
        ({"vertices": [1], "edges": [[1, 2]]}, InvalidVertex),
        ({"vertices": [1, "1"], "edges": []}, InvalidGraph),
        ({"vertices": [True], "edges": []}, InvalidGraph),
        ({"vertices": [1.5], "edges": []}, InvalidGraph),
        ({"vertices": [1, 2], "edges": [[1]]}, InvalidGraph),
        ({"vertices": []}, InvalidGraph),
        ([], InvalidGraph),
    ],
)
def test_graph_json_validation(obj, err):
    with pytest.raises(err):
        graph_from_json(obj)


def test_rationals():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(7) == 7
    for bad in ("x", "1/0", 1.5, True, None):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_coloring_round_trip_with_tuple_vertices():
    g = Graph([("L", 0), ("R", 1), "x"], [(("L", 0), "x")])
    f = {("L", 0): Fraction(1, 2), ("R", 1): Fraction(-3), "x": Fraction(2)}
    doc = coloring_to_json(f, note="t")
    assert doc["values"] == {'["L",0]': "1/2", '["R",1]': "-3", "x": "2"}
    assert coloring_values_from_json(json.loads(json.dumps(doc)), g) == f


def test_coloring_must_be_total_and_known():
    g = path_graph(2)
    with pytest.raises(ParseError):
        coloring_values_from_json({"values": {"0": "1"}}, g)
    with pytest.raises(InvalidVertex):
        coloring_values_from_json({"values": {"0": "1", "1": "2", "9": "3"}}, g)
    with pytest.raises(ParseError):
        coloring_values_from_json({"vals": {}}, g)


def test_vertex_tokens():
    assert vertex_token("a") == "a"
    assert vertex_token(3) == "3"
    assert vertex_token(("L", (0, "b"))) == '["L",[0,"b"]]'


def test_dot_is_stable_and_quoted():
    text = to_dot(Graph([("L", 0), "a"], [(("L", 0), "a")]), name="g")
    assert text == 'graph "g" {\n  "a";\n  "[\\"L\\",0]";\n  "a" -- "[\\"L\\",0]";\n}\n'
    assert to_dot(octahedron()) == to_dot(octahedron())
