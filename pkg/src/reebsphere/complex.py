"""The Whitney (clique) complex of a graph and what is built from it.

Simplices are represented as tuples of vertices in vertex order.  The
same tuples are the vertex identifiers of the Barycentric refinement, so
refined graphs keep the provenance of every vertex.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from itertools import combinations

from .errors import (
    BudgetExhausted,
    EmptyFactor,
    InvalidVertex,
    LevelOnVertex,
    NotAManifoldWithBoundary,
    NotLocallyInjective,
    NotRefinableEdge,
)
from .graph import Graph, fresh_vertex, induced_subgraph, unit_sphere, vertex_key
from .linalg import rank_gf2, rank_rational

Simplex = tuple


def _cliques(g: Graph):
    """Yield every complete subgraph as a tuple of vertex positions (ascending)."""
    masks = g.bitsets()
    stack = [((), (1 << len(g)) - 1)]
    while stack:
        prefix, cand = stack.pop()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique = prefix + (v,)
            yield clique
            nxt = cand & masks[v]
            if nxt:
                stack.append((clique, nxt))


def simplices(g: Graph) -> list:
    """All simplices, ordered by dimension and then lexicographically."""

    def compute(g):
        vs = g.vertices
        out = sorted(_cliques(g), key=lambda c: (len(c), c))
        return tuple(tuple(vs[i] for i in c) for c in out)

    return list(g.cached("simplices", compute))


def simplex_dim(s: Simplex) -> int:
    return len(s) - 1


def f_vector(g: Graph) -> list:
    """``counts[k]`` is the number of k-simplices."""

    def compute(g):
        counts = []
        for c in _cliques(g):
            k = len(c) - 1
            while len(counts) <= k:
                counts.append(0)
            counts[k] += 1
        return tuple(counts)

    return list(g.cached("fvector", compute))


def dimension(g: Graph) -> int:
    """Largest simplex dimension; -1 for the empty graph."""
    return len(f_vector(g)) - 1


def euler_characteristic(g: Graph) -> int:
    return sum((-1) ** k * n for k, n in enumerate(f_vector(g)))


def wu_characteristic(g: Graph) -> int:
    """Sum of w(x)w(y) over ordered pairs of intersecting simplices, w = (-1)^dim.

    Evaluated through inclusion-exclusion over the common face ``z``:
    the indicator of ``x & y != {}`` equals the sum over nonempty ``z``
    contained in both of ``(-1)^(|z|+1)``.
    """
    star = {}
    for c in _cliques(g):
        w = -1 if len(c) % 2 == 0 else 1
        for r in range(1, len(c) + 1):
            for z in combinations(c, r):
                star[z] = star.get(z, 0) + w
    return sum((1 if len(z) % 2 else -1) * s * s for z, s in star.items())


def _boundary_rows(g: Graph):
    by_dim = {}
    for c in _cliques(g):
        by_dim.setdefault(len(c) - 1, []).append(c)
    top = max(by_dim, default=-1)
    levels = [sorted(by_dim[k]) for k in range(top + 1)]
    index = [{s: i for i, s in enumerate(level)} for level in levels]
    return levels, index


def betti_numbers(g: Graph, field: str = "Q") -> list:
    """Betti numbers of the Whitney complex.

    ``field="Q"`` (default, authoritative) uses exact rational elimination;
    ``field="GF2"`` is a faster bit-mask path giving mod-2 Betti numbers.
    """
    if field not in ("Q", "GF2"):
        raise ValueError(f"unknown coefficient field {field!r}")
    key = "betti_" + field
    return list(g.cached(key, lambda g: tuple(_betti(g, field))))


def _betti(g, field):
    levels, index = _boundary_rows(g)
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        below = index[k - 1]
        if field == "Q":
            rows = []
            for s in levels[k]:
                rows.append({below[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
            ranks[k] = rank_rational(rows)
        else:
            rows = []
            for s in levels[k]:
                m = 0
                for i in range(len(s)):
                    m |= 1 << below[s[:i] + s[i + 1:]]
                rows.append(m)
            ranks[k] = rank_gf2(rows)
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels))]


def barycentric_refinement(g: Graph) -> Graph:
    """G': one vertex per simplex, edges between nested simplices."""

    def compute(g):
        vs = g.vertices
        cl = list(_cliques(g))
        verts = [tuple(vs[i] for i in c) for c in cl]
        edges = []
        for c, big in zip(cl, verts):
            for r in range(1, len(c)):
                for sub in combinations(c, r):
                    edges.append((tuple(vs[i] for i in sub), big))
        return Graph(verts, edges)

    return g.cached("barycentric", compute)


class Coloring(Mapping):
    """A vertex function with exact rational values.

    Local injectivity is not enforced on construction because level-set
    constructions also use non-injective functions; operations that need
    it call :meth:`check_locally_injective`.
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        self._values = {v: Fraction(q) for v, q in dict(values).items()}

    def __getitem__(self, v):
        return self._values[v]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        items = sorted(self._values.items(), key=lambda kv: vertex_key(kv[0]))
        return "Coloring({" + ", ".join(f"{v!r}: {q}" for v, q in items) + "})"

    def negated(self) -> "Coloring":
        return Coloring({v: -q for v, q in self._values.items()})

    def restrict(self, vertices) -> "Coloring":
        return Coloring({v: self._values[v] for v in vertices})

    def image(self) -> list:
        return sorted(set(self._values.values()))

    def gaps(self) -> list:
        """Midpoints between consecutive values of the image."""
        im = self.image()
        return [(a + b) / 2 for a, b in zip(im, im[1:])]

    def check_total(self, g: Graph):
        for v in g.vertices:
            if v not in self._values:
                raise InvalidVertex(v, "coloring")

    def check_locally_injective(self, g: Graph, at=None):
        self.check_total(g)
        pairs = ((at, y) for y in g.neighbors(at)) if at is not None else g.edges()
        for a, b in pairs:
            if self._values[a] == self._values[b]:
                raise NotLocallyInjective((a, b), self._values[a])

    def is_locally_injective(self, g: Graph) -> bool:
        return all(self._values[a] != self._values[b] for a, b in g.edges())


def as_coloring(f) -> Coloring:
    return f if isinstance(f, Coloring) else Coloring(f)


def _check_level(g, f, c):
    f = as_coloring(f)
    f.check_total(g)
    c = Fraction(c)
    for v in g.vertices:
        if f[v] == c:
            raise LevelOnVertex(f"level {c} is the value of the coloring at {v!r}")
    return f, c


def sublevel_set(g: Graph, f, c) -> Graph:
    """{f <= c} in G': simplices whose minimum value lies below ``c``."""
    f, c = _check_level(g, f, c)
    keep = [s for s in simplices(g) if min(f[v] for v in s) < c]
    return induced_subgraph(barycentric_refinement(g), keep)


def superlevel_set(g: Graph, f, c) -> Graph:
    """{f >= c} in G': simplices whose maximum value lies above ``c``."""
    f, c = _check_level(g, f, c)
    keep = [s for s in simplices(g) if max(f[v] for v in s) > c]
    return induced_subgraph(barycentric_refinement(g), keep)


def level_surface(g: Graph, f, c) -> Graph:
    """{f = c} in G': simplices on which ``f - c`` takes both signs."""
    f, c = _check_level(g, f, c)
    keep = [s for s in simplices(g) if len(s) > 1 and min(f[v] for v in s) < c < max(f[v] for v in s)]
    return induced_subgraph(barycentric_refinement(g), keep)


def center_manifold(g: Graph, f, x) -> Graph:
    """B_f(x): the level surface {f = f(x)} inside the refined unit sphere S(x)'."""
    f = as_coloring(f)
    if x not in g:
        raise InvalidVertex(x)
    f.check_locally_injective(g, at=x)
    s = unit_sphere(g, x)
    return level_surface(s, f.restrict(s.vertices), f[x])


def boundary_simplices(g: Graph, d: int) -> list:
    """The boundary complex: (d-1)-simplices lying in exactly one d-simplex, with all their faces."""
    if d < 1:
        return []
    count = {}
    for s in simplices(g):
        if len(s) == d + 1:
            for facet in combinations(s, d):
                count[facet] = count.get(facet, 0) + 1
    out = set()
    for facet, k in count.items():
        if k == 1:
            out.update(_faces(facet))
    return sorted(out, key=lambda s: (len(s), [vertex_key(v) for v in s]))


def boundary(g: Graph, d: int, budget=None) -> Graph:
    """The boundary of a d-graph with boundary, as a graph.

    Boundary vertices are those whose unit sphere is a (d-1)-ball; every
    other unit sphere must be a (d-1)-sphere.  The edges are those of the
    boundary complex (:func:`boundary_simplices`), so an interior edge
    between two boundary vertices is not part of the boundary.
    """
    from .recognition import Answer, default_recognizer

    rec = default_recognizer()
    kw = {} if budget is None else {"budget": budget}
    rim = []
    for x in g.vertices:
        s = unit_sphere(g, x)
        v = rec.is_sphere(s, d - 1, **kw)
        if v.answer is Answer.YES:
            continue
        w = rec.is_ball(s, d - 1, **kw) if d >= 1 else v
        if w.answer is Answer.YES:
            rim.append(x)
        elif Answer.UNKNOWN in (v.answer, w.answer):
            raise BudgetExhausted(f"could not classify the unit sphere of {x!r}")
        else:
            raise NotAManifoldWithBoundary(
                f"unit sphere of {x!r} is neither a {d - 1}-sphere nor a {d - 1}-ball"
            )
    faces = boundary_simplices(g, d)
    if {s[0] for s in faces if len(s) == 1} != set(rim):
        raise NotAManifoldWithBoundary("boundary vertices disagree with the boundary complex")
    return Graph(rim, [s for s in faces if len(s) == 2])


def _faces(s):
    """All nonempty faces of a simplex tuple, including itself."""
    return [sub for r in range(1, len(s) + 1) for sub in combinations(s, r)]


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Product complex realized on pairs of simplices.

    ``(x1, y1) ~ (x2, y2)`` when the pairs are distinct and nested in both
    coordinates the same way.
    """
    if not g or not h:
        raise EmptyFactor("the product with the empty graph is undefined")
    sg, sh = simplices(g), simplices(h)
    verts = [(x, y) for x in sg for y in sh]
    face_g = {x: _faces(x) for x in sg}
    face_h = {y: _faces(y) for y in sh}
    edges = []
    for x2, y2 in verts:
        for x1 in face_g[x2]:
            for y1 in face_h[y2]:
                if (x1, y1) != (x2, y2):
                    edges.append(((x1, y1), (x2, y2)))
    return Graph(verts, edges)


def edge_refine(g: Graph, e, d: int, budget=None) -> Graph:
    """Subdivide the edge ``e = (a, b)`` of a d-graph.

    The edge is replaced by a new vertex joined to ``a``, ``b`` and to every
    common neighbour.  Requires the common neighbourhood to be a
    (d-2)-sphere and checks that the result is again a d-graph.
    """
    from .recognition import Answer, default_recognizer

    a, b = e
    if not g.has_edge(a, b):
        raise NotRefinableEdge(f"{a!r}-{b!r} is not an edge")
    rec = default_recognizer()
    kw = {} if budget is None else {"budget": budget}
    common = g.neighbors(a) & g.neighbors(b)
    link = induced_subgraph(g, common)
    if rec.is_sphere(link, d - 2, **kw).answer is not Answer.YES:
        raise NotRefinableEdge(f"common neighbourhood of {a!r}-{b!r} is not a {d - 2}-sphere")
    m = fresh_vertex(g, "mid")
    edges = [(x, y) for x, y in g.edges() if {x, y} != {a, b}]
    edges += [(m, a), (m, b)] + [(m, y) for y in common]
    out = Graph(list(g.vertices) + [m], edges)
    if rec.is_dgraph(out, d, **kw).answer is not Answer.YES:
        raise NotRefinableEdge(f"refining {a!r}-{b!r} does not produce a {d}-graph")
    return out
