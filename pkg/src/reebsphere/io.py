"""Graph JSON, Coloring JSON and DOT serialization.

Graph JSON::

    {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}

Vertices are listed in ascending order and every edge exactly once with
its endpoints ascending.  Integer and string identifiers are written as
JSON numbers and strings; tuple identifiers (produced by joins and
refinements) as nested JSON arrays.

Coloring JSON::

    {"values": {"a": "3/2", "b": "-1", ...}}

Keys are the vertex tokens (see :func:`vertex_token`), values canonical
rational strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InvalidGraph, InvalidVertex, ReebError
from .graph import Graph, vertex_key


class ParseError(ReebError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


def _to_json_vertex(v):
    if isinstance(v, tuple):
        return [_to_json_vertex(u) for u in v]
    return v


def _from_json_vertex(v):
    if isinstance(v, list):
        return tuple(_from_json_vertex(u) for u in v)
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InvalidGraph(f"invalid vertex identifier {v!r}")
    return v


def vertex_token(v) -> str:
    """String form of a vertex used for Coloring keys and DOT node names."""
    if isinstance(v, str):
        return v
    return json.dumps(_to_json_vertex(v), separators=(",", ":"))


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": [_to_json_vertex(v) for v in g.vertices],
        "edges": [[_to_json_vertex(a), _to_json_vertex(b)] for a, b in g.edges()],
    }


def graph_from_json(obj) -> Graph:
    """Validate and build a graph from parsed Graph JSON."""
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise InvalidGraph('graph JSON must be an object with "vertices" and "edges"')
    raw_vs, raw_es = obj["vertices"], obj["edges"]
    if not isinstance(raw_vs, list) or not isinstance(raw_es, list):
        raise InvalidGraph('"vertices" and "edges" must be arrays')
    vs = [_from_json_vertex(v) for v in raw_vs]
    if len(set(vs)) != len(vs):
        raise InvalidGraph("duplicate vertex")
    tokens = {vertex_token(v) for v in vs}
    if len(tokens) != len(vs):
        raise InvalidGraph("two vertices share the same string token")
    known = set(vs)
    seen = set()
    edges = []
    for e in raw_es:
        if not isinstance(e, list) or len(e) != 2:
            raise InvalidGraph(f"edge {e!r} is not a pair")
        a, b = _from_json_vertex(e[0]), _from_json_vertex(e[1])
        if a == b:
            raise InvalidGraph(f"self-loop at {a!r}")
        for x in (a, b):
            if x not in known:
                raise InvalidVertex(x, "vertex list")
        key = frozenset((a, b))
        if key in seen:
            raise InvalidGraph(f"duplicate edge {a!r}-{b!r}")
        seen.add(key)
        edges.append((a, b))
    return Graph(vs, edges)


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def dumps_graph(g: Graph, **extra) -> str:
    obj = graph_to_json(g)
    obj.update(extra)
    return json.dumps(obj, sort_keys=False) + "\n"


def loads_graph(text: str) -> Graph:
    return graph_from_json(_loads(text))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())


def write_graph(g: Graph, path, **extra):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g, **extra))


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ParseError(f"invalid rational {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"rational values must be strings like '3/2', got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid rational {s!r}") from None


def coloring_to_json(values: dict, **extra) -> dict:
    items = sorted(values.items(), key=lambda kv: vertex_key(kv[0]))
    obj = {"values": {vertex_token(v): format_rational(q) for v, q in items}}
    obj.update(extra)
    return obj


def coloring_values_from_json(obj, g: Graph) -> dict:
    """Resolve Coloring JSON keys against the vertices of ``g``."""
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), dict):
        raise ParseError('coloring JSON must be an object with a "values" object')
    by_token = {vertex_token(v): v for v in g.vertices}
    out = {}
    for key, raw in obj["values"].items():
        if key not in by_token:
            raise InvalidVertex(key, "graph")
        out[by_token[key]] = parse_rational(raw)
    missing = [v for v in g.vertices if v not in out]
    if missing:
        raise ParseError(f"coloring is not defined on {vertex_token(missing[0])!r}")
    return out


def loads_json(text: str):
    return _loads(text)


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return _loads(fh.read())


def to_dot(g: Graph, name="G", labels=None) -> str:
    """DOT text with node names equal to the vertex tokens."""

    def q(s):
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {q(name)} {{"]
    for v in g.vertices:
        tok = vertex_token(v)
        if labels and v in labels:
            lines.append(f"  {q(tok)} [label={q(str(labels[v]))}];")
        else:
            lines.append(f"  {q(tok)};")
    for a, b in g.edges():
        lines.append(f"  {q(vertex_token(a))} -- {q(vertex_token(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
