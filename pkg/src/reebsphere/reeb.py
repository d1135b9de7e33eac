"""Two-critical-point functions on spheres and balls, foliations, sublevel balls.

A d-sphere is punctured at ``x_0`` and the remaining contractible graph is
collapsed vertex by vertex; numbering vertices in that order gives a
function whose only critical points are the first and the last vertex.
Conversely a d-graph with such a function is certified as a sphere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complex import (
    Coloring,
    as_coloring,
    boundary,
    level_surface,
    sublevel_set,
)
from .errors import (
    BudgetExhausted,
    ConstructionBug,
    NotABall,
    NotADGraph,
    NotASphere,
    PreconditionFailed,
)
from .graph import Graph, delete_vertex, fresh_vertex, induced_subgraph, unit_sphere, vertex_key
from .io import _to_json_vertex, coloring_to_json, format_rational, graph_to_json
from .morse import symmetric_critical_points
from .recognition import DEFAULT_BUDGET, Answer, TopologyVerdict, default_recognizer


@dataclass(frozen=True)
class ReebFunction:
    """An injective coloring with exactly two symmetric-critical vertices.

    ``critical_vertices`` is (minimum, maximum); ``collapse_order`` lists
    the vertices in increasing order of value.  ``degenerate`` marks the
    one-vertex case where minimum and maximum coincide.
    """

    coloring: Coloring
    critical_vertices: tuple
    collapse_order: tuple
    degenerate: bool = False

    def to_json(self, **extra) -> dict:
        cert = {
            "critical_vertices": [_to_json_vertex(v) for v in self.critical_vertices],
            "collapse_order": [_to_json_vertex(v) for v in self.collapse_order],
            "degenerate": self.degenerate,
        }
        cert.update(extra)
        return coloring_to_json(dict(self.coloring), certificate=cert)


@dataclass(frozen=True)
class Level:
    c: Fraction
    surface: Graph
    verdict: str

    def to_json(self) -> dict:
        return {"c": format_rational(self.c), "surface": graph_to_json(self.surface), "verdict": self.verdict}


@dataclass(frozen=True)
class Foliation:
    d: int
    levels: list = field(default_factory=list)

    def to_json(self) -> list:
        return [lv.to_json() for lv in self.levels]

    def verdicts(self) -> list:
        return [lv.verdict for lv in self.levels]


def _require(verdict: TopologyVerdict, exc, message):
    if verdict.unknown:
        raise BudgetExhausted(message + " (recognition budget exhausted)")
    if not verdict.yes:
        raise exc(message + (f": {verdict.obstruction}" if verdict.obstruction else ""))


def cone_extension(g: Graph, over, apex=None) -> Graph:
    """``g`` plus one fresh vertex joined to exactly the vertices in ``over``."""
    over = list(over)
    for v in over:
        g.neighbors(v)  # raises InvalidVertex
    if apex is None:
        apex = fresh_vertex(g, "cone")
    elif apex in g:
        raise PreconditionFailed(f"apex {apex!r} is already a vertex")
    return Graph(list(g.vertices) + [apex], g.edges() + [(apex, v) for v in over])


def build_reeb_function(g: Graph, d: int, start=None, budget: int = DEFAULT_BUDGET) -> ReebFunction:
    """Number the vertices of a d-sphere along a puncture-then-collapse order.

    With ``start`` given, the puncture is at that vertex (any vertex whose
    removal leaves a contractible graph works); otherwise the sphere
    recognizer's puncture is used.  The result is re-verified vertex by
    vertex before it is returned.
    """
    if d == -1:
        raise NotASphere("the (-1)-sphere carries no function")
    rec = default_recognizer()
    if start is None:
        v = rec.is_sphere(g, d, budget)
        _require(v, NotASphere, f"graph is not a {d}-sphere")
        order = v.witness
    else:
        _require(rec.is_dgraph(g, d, budget), NotASphere, f"graph is not a {d}-graph")
        v = rec.is_contractible(delete_vertex(g, start), budget)
        _require(v, NotASphere, f"removing {start!r} does not leave a contractible graph")
        order = (start,) + v.witness
    f = Coloring({x: k for k, x in enumerate(order)})
    crit = symmetric_critical_points(g, f, budget)
    if crit is None:
        raise BudgetExhausted("could not verify the constructed function")
    expected = sorted({order[0], order[-1]}, key=order.index)
    if sorted(crit, key=order.index) != expected:
        raise ConstructionBug(f"constructed function has critical points {crit}, expected {expected}")
    return ReebFunction(f, (order[0], order[-1]), tuple(order))


def certify_sphere_via_reeb(g: Graph, f, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    """Yes iff the d-graph ``g`` carries ``f`` with exactly two critical points.

    Refuses graphs that are not d-graphs.  A Yes is cross-checked with the
    sphere recognizer.
    """
    rec = default_recognizer()
    dg = rec.is_dgraph(g, d, budget)
    if dg.unknown:
        return TopologyVerdict(Answer.UNKNOWN, (), dg.budget_spent, dg.obstruction)
    if not dg.yes:
        raise NotADGraph(f"graph is not a {d}-graph: {dg.obstruction}")
    f = as_coloring(f)
    crit = symmetric_critical_points(g, f, budget)
    if crit is None:
        return TopologyVerdict(Answer.UNKNOWN, (), 0, "criticality undecided within budget")
    if len(crit) != 2:
        names = ", ".join(repr(x) for x in crit)
        return TopologyVerdict(Answer.NO, tuple(crit), 0, f"{len(crit)} critical points: {names}")
    sph = rec.is_sphere(g, d, budget)
    if sph.unknown:
        return TopologyVerdict(Answer.UNKNOWN, tuple(crit), sph.budget_spent, sph.obstruction)
    if not sph.yes:
        raise ConstructionBug("two critical points on a d-graph that is not recognized as a sphere")
    return TopologyVerdict(Answer.YES, tuple(crit), sph.budget_spent)


def classify_level(surface: Graph, d: int, budget: int = DEFAULT_BUDGET) -> str:
    """``empty``, ``k-sphere``, ``k-ball``, ``unknown`` or ``other`` for a level of a d-graph."""
    if not surface:
        return "empty"
    rec = default_recognizer()
    k = d - 1
    s = rec.is_sphere(surface, k, budget)
    if s.yes:
        return f"{k}-sphere"
    b = rec.is_ball(surface, k, budget) if k >= 0 else s
    if b.yes:
        return f"{k}-ball"
    if s.unknown or b.unknown:
        return "unknown"
    return "other"


def foliate(g: Graph, f, d: int, budget: int = DEFAULT_BUDGET) -> Foliation:
    """Level surfaces {f = c} at the midpoints between consecutive values of ``f``."""
    rec = default_recognizer()
    if not rec.is_dgraph(g, d, budget).yes and not rec.is_ball(g, d, budget).yes:
        raise PreconditionFailed(f"graph is neither a {d}-graph nor a {d}-ball")
    f = as_coloring(f)
    f.check_total(g)
    levels = []
    for c in f.gaps():
        surface = level_surface(g, f, c)
        levels.append(Level(c, surface, classify_level(surface, d, budget)))
    return Foliation(d, levels)


def sublevel_ball(g: Graph, k_vertices, d: int, budget: int = DEFAULT_BUDGET):
    """The ball {f <= 0} and sphere {f = 0} in G' for f = -1 on K, +1 elsewhere.

    Returns ``(ball, boundary_sphere)`` after checking that the ball is a
    d-ball, the sphere a (d-1)-sphere, and that the boundary of the ball
    is exactly the sphere.
    """
    rec = default_recognizer()
    _require(rec.is_dgraph(g, d, budget), PreconditionFailed, f"graph is not a {d}-graph")
    k = set(k_vertices)
    _require(
        rec.is_contractible(induced_subgraph(g, k), budget),
        PreconditionFailed,
        "K is not contractible",
    )
    f = Coloring({v: (-1 if v in k else 1) for v in g.vertices})
    ball = sublevel_set(g, f, 0)
    sphere = level_surface(g, f, 0)
    _require(rec.is_ball(ball, d, budget), ConstructionBug, f"{{f <= 0}} is not a {d}-ball")
    _require(rec.is_sphere(sphere, d - 1, budget), ConstructionBug, f"{{f = 0}} is not a {d - 1}-sphere")
    if boundary(ball, d, budget) != sphere:
        raise ConstructionBug("the boundary of {f <= 0} differs from {f = 0}")
    return ball, sphere


def _ball_order(g: Graph, budget: int):
    """Collapse order of the ball ``g`` whose lower spheres in ``g`` stay contractible.

    Each step removes a vertex ``x`` from the remaining graph ``G_k`` such
    that ``S(x)`` in ``G_k`` and ``G_k - x`` are contractible (upper side
    regular) and the already removed neighbours of ``x`` induce a
    contractible graph (lower side regular).  Depth-first with backtracking;
    dead states are remembered by their set of removed vertices.
    """
    rec = default_recognizer()
    dead = set()
    spent = 0

    def contractible(h):
        v = rec.is_contractible(h, budget)
        if v.unknown:
            raise BudgetExhausted("contractibility undecided while ordering the ball")
        return v.yes

    def extend(cur: Graph, placed: tuple):
        nonlocal spent
        if len(cur) == 1:
            x = cur.vertices[0]
            return placed + (x,)
        key = frozenset(placed)
        if key in dead:
            return None
        spent += 1
        if spent > budget:
            raise BudgetExhausted("no admissible order found within budget")
        done = set(placed)
        for x in sorted(cur.vertices, key=lambda v: (cur.degree(v), vertex_key(v))):
            if placed and not contractible(induced_subgraph(g, g.neighbors(x) & done)):
                continue
            if not contractible(unit_sphere(cur, x)):
                continue
            rest = delete_vertex(cur, x)
            if not contractible(rest):
                continue
            found = extend(rest, placed + (x,))
            if found is not None:
                return found
        dead.add(key)
        return None

    return extend(g, ())


def reeb_function_on_ball(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> ReebFunction:
    """A function with exactly two critical points on a d-ball.

    The ball is completed to a sphere by a cone over its boundary and the
    cone apex is taken as the bottom of the order; the rest of the order
    is a collapse of the ball (the sphere punctured at the apex), chosen
    so that every vertex other than the first and last stays regular in
    the ball itself.  Values are 0..n-1 along that order.
    """
    rec = default_recognizer()
    v = rec.is_ball(g, d, budget)
    _require(v, NotABall, f"graph is not a {d}-ball")
    if d == 0:
        (x,) = g.vertices
        return ReebFunction(Coloring({x: 0}), (x, x), (x,), degenerate=True)
    apex = fresh_vertex(g, "cone")
    sphere = cone_extension(g, v.witness, apex)
    _require(rec.is_sphere(sphere, d, budget), ConstructionBug, f"cone over the boundary is not a {d}-sphere")
    order = _ball_order(g, budget)
    if order is None:
        raise ConstructionBug("no two-critical-point order exists on this ball")
    f = Coloring({x: k for k, x in enumerate(order)})
    crit = symmetric_critical_points(g, f, budget)
    if crit is None:
        raise BudgetExhausted("could not verify the constructed function")
    if sorted(crit, key=order.index) != [order[0], order[-1]]:
        raise ConstructionBug(f"constructed function has critical points {crit}")
    return ReebFunction(f, (order[0], order[-1]), tuple(order))
