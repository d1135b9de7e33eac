"""Immutable finite simple graphs.

Vertices are opaque identifiers: integers, strings, or (nested) tuples of
those.  They are always kept sorted by :func:`vertex_key`, so every
iteration order in the package is reproducible.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .errors import InvalidGraph, InvalidVertex

Vertex = Hashable


def vertex_key(v):
    """Total order over mixed vertex identifiers: ints < strings < tuples."""
    if isinstance(v, bool):
        raise InvalidGraph(f"booleans are not valid vertex identifiers: {v!r}")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(u) for u in v))
    raise InvalidGraph(f"unsupported vertex identifier {v!r} of type {type(v).__name__}")


class Graph:
    """A finite simple graph with a deterministic vertex order.

    Instances never change after construction; all operations in the
    package return new graphs.  Equality is label equality (same vertex
    identifiers, same edges); use :func:`reebsphere.canon.canonical_form`
    for isomorphism questions.
    """

    __slots__ = ("_vertices", "_adj", "_cache")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        vs = set(vertices)
        adj: dict = {v: set() for v in vs}
        for e in edges:
            try:
                a, b = e
            except (TypeError, ValueError):
                raise InvalidGraph(f"edge {e!r} is not a pair") from None
            if a == b:
                raise InvalidGraph(f"self-loop at {a!r}")
            if a not in adj:
                raise InvalidVertex(a, "vertex set of the edge list")
            if b not in adj:
                raise InvalidVertex(b, "vertex set of the edge list")
            adj[a].add(b)
            adj[b].add(a)
        order = tuple(sorted(vs, key=vertex_key))
        self._vertices = order
        self._adj = {v: frozenset(adj[v]) for v in order}
        self._cache = {}

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable[Vertex] = ()) -> "Graph":
        """Build a graph whose vertex set is ``vertices`` plus all edge endpoints."""
        edges = list(edges)
        vs = set(vertices)
        for a, b in edges:
            vs.add(a)
            vs.add(b)
        return cls(vs, edges)

    @classmethod
    def _trusted(cls, order: tuple, adj: Mapping) -> "Graph":
        # order must already be sorted and adj symmetric, restricted to order
        g = cls.__new__(cls)
        g._vertices = order
        g._adj = adj
        g._cache = {}
        return g

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def edges(self) -> list:
        """Edges as ``(a, b)`` pairs with ``a < b``, in sorted order."""
        if "edges" not in self._cache:
            pos = self.index
            out = []
            for a in self._vertices:
                ia = pos[a]
                for b in sorted(self._adj[a], key=pos.__getitem__):
                    if pos[b] > ia:
                        out.append((a, b))
            self._cache["edges"] = tuple(out)
        return list(self._cache["edges"])

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise InvalidVertex(v) from None
        except TypeError:
            raise InvalidVertex(v) from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a, b) -> bool:
        return a in self._adj and b in self._adj[a]

    def number_of_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    @property
    def index(self) -> dict:
        """Vertex -> position in :attr:`vertices`."""
        idx = self._cache.get("index")
        if idx is None:
            idx = {v: i for i, v in enumerate(self._vertices)}
            self._cache["index"] = idx
        return idx

    def bitsets(self) -> list:
        """Neighbourhoods as integer bit masks over vertex positions."""
        masks = self._cache.get("bits")
        if masks is None:
            pos = self.index
            masks = []
            for v in self._vertices:
                m = 0
                for u in self._adj[v]:
                    m |= 1 << pos[u]
                masks.append(m)
            self._cache["bits"] = masks
        return masks

    def cached(self, key, compute):
        """Memoize a derived quantity on this (immutable) graph."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute(self)
            return value

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __contains__(self, v):
        try:
            return v in self._adj
        except TypeError:
            return False

    def __bool__(self):
        return bool(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self):
        h = self._cache.get("hash")
        if h is None:
            h = hash((self._vertices, tuple(self.edges())))
            self._cache["hash"] = h
        return h

    def __repr__(self):
        n, m = len(self), self.number_of_edges()
        if n <= 8:
            return f"Graph(vertices={list(self._vertices)!r}, edges={self.edges()!r})"
        return f"Graph(<{n} vertices, {m} edges>)"

    # pickling support for __slots__ classes without __dict__
    def __getstate__(self):
        return (self._vertices, self.edges())

    def __setstate__(self, state):
        vertices, edges = state
        g = Graph(vertices, edges)
        self._vertices, self._adj, self._cache = g._vertices, g._adj, {}


def _check_vertices(g: Graph, s) -> set:
    s = set(s)
    for v in s:
        if v not in g:
            raise InvalidVertex(v)
    return s


def induced_subgraph(g: Graph, s: Iterable[Vertex]) -> Graph:
    """The subgraph on ``s`` containing every edge of ``g`` with both ends in ``s``."""
    s = _check_vertices(g, s)
    order = tuple(v for v in g.vertices if v in s)
    adj = {v: g._adj[v] & s for v in order}
    return Graph._trusted(order, adj)


def unit_sphere(g: Graph, x) -> Graph:
    """S(x): the subgraph induced by the neighbours of ``x``."""
    return induced_subgraph(g, g.neighbors(x))


def unit_ball(g: Graph, x) -> Graph:
    """B(x): the subgraph induced by ``x`` and its neighbours."""
    return induced_subgraph(g, g.neighbors(x) | {x})


def delete_vertex(g: Graph, x) -> Graph:
    if x not in g:
        raise InvalidVertex(x)
    order = tuple(v for v in g.vertices if v != x)
    adj = {v: (g._adj[v] - {x}) if x in g._adj[v] else g._adj[v] for v in order}
    return Graph._trusted(order, adj)


def delete_vertices(g: Graph, xs: Iterable[Vertex]) -> Graph:
    xs = _check_vertices(g, xs)
    return induced_subgraph(g, [v for v in g.vertices if v not in xs])


def relabel(g: Graph, mapping: Mapping) -> Graph:
    """Rename vertices through an injective ``mapping`` defined on all of ``g``."""
    image = [mapping[v] for v in g.vertices]
    if len(set(image)) != len(image):
        raise InvalidGraph("relabeling is not injective")
    return Graph(image, [(mapping[a], mapping[b]) for a, b in g.edges()])


def join(g: Graph, h: Graph, tags=("L", "R")) -> Graph:
    """The join g + h: disjoint union plus every edge between the two sides.

    Vertices are tagged ``(tags[0], v)`` and ``(tags[1], w)`` so that the
    two vertex sets are disjoint and provenance stays readable.
    """
    lt, rt = tags
    left = [(lt, v) for v in g.vertices]
    right = [(rt, w) for w in h.vertices]
    edges = [((lt, a), (lt, b)) for a, b in g.edges()]
    edges += [((rt, a), (rt, b)) for a, b in h.edges()]
    edges += [(a, b) for a in left for b in right]
    return Graph(left + right, edges)


def disjoint_union(g: Graph, h: Graph, tags=("L", "R")) -> Graph:
    lt, rt = tags
    vs = [(lt, v) for v in g.vertices] + [(rt, w) for w in h.vertices]
    edges = [((lt, a), (lt, b)) for a, b in g.edges()]
    edges += [((rt, a), (rt, b)) for a, b in h.edges()]
    return Graph(vs, edges)


def complement(g: Graph) -> Graph:
    vs = g.vertices
    edges = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if not g.has_edge(a, b)]
    return Graph(vs, edges)


def connected_components(g: Graph) -> list:
    """Maximal connected induced subgraphs, ordered by their smallest vertex."""
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g._adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(induced_subgraph(g, comp))
    return comps


def is_connected(g: Graph) -> bool:
    if not g:
        return False
    masks = g.bitsets()
    full = (1 << len(g)) - 1
    reached = frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def is_complete(g: Graph) -> bool:
    n = len(g)
    return all(len(g._adj[v]) == n - 1 for v in g.vertices)


def fresh_vertex(g: Graph, base="new"):
    """A vertex identifier of the form ``(base, k)`` not used in ``g``."""
    k = 0
    while (base, k) in g:
        k += 1
    return (base, k)
