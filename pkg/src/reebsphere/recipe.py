"""A small expression language for building graphs.

Grammar::

    expr   := term (("⊕" | "+") term)*
    term   := factor (("×" | "*") factor)*
    factor := NAME | NAME "(" expr ("," INT)* ")" | "(" expr ")"

Names are gallery fixtures (``octahedron``, ``torus4x4``, ...) or the
families ``C<n>`` (cycle), ``P<n>`` (path), ``K<n>`` (complete graph),
``W<n>`` (wheel) and ``S<d>`` (cross-polytope d-sphere), plus ``empty``.
Functions: ``B(g)`` Barycentric refinement, ``cone(g)``, ``puncture(g)``
(delete the last vertex), ``refine(g, d)`` (edge-refine the first
refinable edge of the d-graph ``g``).

``⊕`` is the join and ``×`` the Cartesian product; both are left
associative and ``×`` binds tighter.
"""

from __future__ import annotations

import re

from . import generators
from .complex import _cliques, barycentric_refinement, cartesian_product, edge_refine
from .errors import NotRefinableEdge, RecipeError
from .graph import Graph, delete_vertex, join

MAX_FAMILY = {"C": 200, "P": 200, "W": 200, "K": 10, "S": 5}
MAX_SIMPLICES = 20_000
MAX_DEPTH = 64
MAX_TOKEN = 32

_TOKEN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)|(?P<op>[⊕+×*(),])")

_NAMED = {
    "empty": generators.empty_graph,
    "octahedron": generators.octahedron,
    "sixteen_cell": generators.sixteen_cell,
    "icosahedron": generators.icosahedron,
    "torus4x4": lambda: generators.torus_grid(4, 4),
    "glued_wheels": lambda: generators.glued_wheels(5),
}

_FAMILY = {
    "C": generators.cycle_graph,
    "P": generators.path_graph,
    "K": generators.complete_graph,
    "W": generators.wheel_graph,
    "S": generators.cross_polytope,
}


def _tokenize(text):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise RecipeError(f"unexpected character {text[pos]!r}", pos)
        value = m.group(m.lastgroup)
        if len(value) > MAX_TOKEN:
            raise RecipeError("token too long", pos)
        out.append((m.lastgroup, value, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.depth = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise RecipeError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            raise RecipeError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("⊕", "+"):
            pos = self.take()[2]
            node = ("join", pos, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] in ("×", "*"):
            pos = self.take()[2]
            node = ("product", pos, node, self.factor())
        return node

    def factor(self):
        kind, value, pos = self.peek()
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise RecipeError("expression nested too deeply", pos)
        try:
            return self._factor(kind, value, pos)
        finally:
            self.depth -= 1

    def _factor(self, kind, value, pos):
        if value == "(":
            self.take()
            node = self.expr()
            self.take(value=")")
            return node
        if kind != "name":
            raise RecipeError(f"expected a graph name, found {value or 'end of input'!r}", pos)
        self.take()
        if self.peek()[1] == "(":
            self.take()
            arg = self.expr()
            ints = []
            while self.peek()[1] == ",":
                self.take()
                ints.append(int(self.take("int")[1]))
            self.take(value=")")
            return ("call", pos, value, arg, tuple(ints))
        return ("name", pos, value)


def parse_recipe(text: str):
    """Parse a recipe into a nested-tuple syntax tree; raises :class:`RecipeError`."""
    if not isinstance(text, str):
        raise RecipeError("recipe must be a string")
    return _Parser(text).parse()


def _simplex_count(g: Graph, cap: int) -> int:
    n = 0
    for _ in _cliques(g):
        n += 1
        if n > cap:
            break
    return n


def _leaf(name, pos, fixtures):
    if name in _NAMED:
        return _NAMED[name]()
    if fixtures is not None and name in fixtures:
        return evaluate(fixtures[name], fixtures)
    m = re.fullmatch(r"([CPKWS])(\d+)", name)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if fam in "CW" and n < 3:
            raise RecipeError(f"{fam}{n} needs at least 3 rim vertices", pos)
        if n > MAX_FAMILY[fam]:
            raise RecipeError(f"{fam}{n} exceeds the size limit {fam}{MAX_FAMILY[fam]}", pos)
        try:
            return _FAMILY[fam](n)
        except ValueError as exc:
            raise RecipeError(str(exc), pos) from None
    raise RecipeError(f"unknown graph name {name!r}", pos)


def _eval(node, fixtures):
    kind, pos = node[0], node[1]
    if kind == "name":
        return _leaf(node[2], pos, fixtures)
    if kind in ("join", "product"):
        a, b = _eval(node[2], fixtures), _eval(node[3], fixtures)
        if kind == "join":
            if len(a) + len(b) > MAX_SIMPLICES:
                raise RecipeError("join too large", pos)
            return join(a, b)
        if _simplex_count(a, MAX_SIMPLICES) * _simplex_count(b, MAX_SIMPLICES) > MAX_SIMPLICES:
            raise RecipeError("product too large", pos)
        return cartesian_product(a, b)
    _, pos, fn, arg, ints = node
    g = _eval(arg, fixtures)
    if fn == "B":
        if ints:
            raise RecipeError("B() takes one argument", pos)
        if _simplex_count(g, MAX_SIMPLICES) > MAX_SIMPLICES:
            raise RecipeError("refinement too large", pos)
        return barycentric_refinement(g)
    if fn == "cone":
        if ints:
            raise RecipeError("cone() takes one argument", pos)
        return join(g, generators.complete_graph(1))
    if fn == "puncture":
        if ints or not g:
            raise RecipeError("puncture() takes one nonempty graph", pos)
        return delete_vertex(g, g.vertices[-1])
    if fn == "refine":
        if len(ints) != 1:
            raise RecipeError("refine() takes a graph and a dimension", pos)
        (d,) = ints
        if d > 4:
            raise RecipeError("refine() supports dimensions up to 4", pos)
        for e in g.edges():
            try:
                return edge_refine(g, e, d)
            except NotRefinableEdge:
                continue
        raise NotRefinableEdge(f"no edge of the graph can be refined as a {d}-graph")
    raise RecipeError(f"unknown function {fn!r}", pos)


def evaluate(recipe, fixtures=None) -> Graph:
    """Build the graph described by ``recipe`` (a string or a parsed tree).

    ``fixtures`` optionally maps extra names to recipes.
    """
    node = parse_recipe(recipe) if isinstance(recipe, str) else recipe
    return _eval(node, fixtures)
