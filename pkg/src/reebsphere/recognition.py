"""Recursive recognition of contractible graphs, spheres, balls and d-graphs.

Definitions (all inductive, booted at the empty graph and ``K_1``):

* ``K_1`` is contractible; the empty graph is not.  A graph is
  contractible if some vertex ``x`` has a contractible unit sphere
  ``S(x)`` and ``G - x`` is contractible.
* The empty graph is the (-1)-sphere.  A d-graph is a nonempty graph in
  which every unit sphere is a (d-1)-sphere; a d-sphere is a d-graph
  that becomes contractible after removing some vertex.
* ``K_1`` is the 0-ball.  A d-ball (d >= 1) is a d-graph with boundary
  whose boundary is a (d-1)-sphere and whose cone over the boundary is a
  d-sphere.

Searches are exhaustive backtracking over candidate vertices in order of
ascending degree, memoized on exact canonical forms, and bounded by a
node budget.  Exhausting the budget yields ``Answer.UNKNOWN``; a No is
only reported after the search space is exhausted or a necessary
condition fails (connectivity, Euler characteristic, mod-2 homology).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from .canon import canonical_form
from .complex import betti_numbers, euler_characteristic
from .graph import (
    Graph,
    delete_vertex,
    fresh_vertex,
    induced_subgraph,
    is_connected,
    unit_sphere,
    vertex_key,
)
from .io import _to_json_vertex

DEFAULT_BUDGET = 10**6

# graphs at least this large get the mod-2 homology test before a search
_HOMOLOGY_PRUNE_MIN = 6


class Answer(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TopologyVerdict:
    """Certified three-valued answer.

    ``witness`` is the collapse order for contractibility, the puncture
    vertex followed by a collapse order for spheres, and the boundary
    vertices for d-graphs with boundary and balls.  ``obstruction``
    explains a No.
    """

    answer: Answer
    witness: tuple = ()
    budget_spent: int = 0
    obstruction: str | None = None

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def no(self) -> bool:
        return self.answer is Answer.NO

    @property
    def unknown(self) -> bool:
        return self.answer is Answer.UNKNOWN

    def to_json(self) -> dict:
        out = {
            "answer": self.answer.value,
            "witness": [_to_json_vertex(v) for v in self.witness],
            "budget_spent": self.budget_spent,
        }
        if self.obstruction:
            out["obstruction"] = self.obstruction
        return out


class RecognitionCache:
    """Thread-safe memo table ``(kind, d, digest) -> result``.

    Yes/No entries are final.  Unknown entries remember the budget they
    failed with and are replaced once a larger budget settles the query.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._table = {}
        self._unknown = {}

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            self._table.setdefault(key, value)
            self._unknown.pop(key, None)

    def get_unknown(self, key):
        return self._unknown.get(key)

    def put_unknown(self, key, budget):
        with self._lock:
            if key not in self._table:
                self._unknown[key] = max(budget, self._unknown.get(key, 0))

    def clear(self):
        with self._lock:
            self._table.clear()
            self._unknown.clear()

    def __len__(self):
        return len(self._table)


class _OutOfBudget(Exception):
    pass


class _Ctx:
    __slots__ = ("budget", "spent")

    def __init__(self, budget):
        self.budget = budget
        self.spent = 0

    def tick(self):
        self.spent += 1
        if self.spent > self.budget:
            raise _OutOfBudget


# Internal results: (answer, witness tuple, obstruction template, obstruction vertices).
# Templates use {0}, {1}, ... for vertices so that cached results can be
# translated between isomorphic graphs.
def _yes(witness=()):
    return (Answer.YES, tuple(witness), None, ())


def _no(template, *vertices):
    return (Answer.NO, (), template, tuple(vertices))


def _by_degree(g: Graph):
    return sorted(g.vertices, key=lambda v: (g.degree(v), vertex_key(v)))


class Recognizer:
    """Recognition queries sharing one memo table (``cache=None`` disables it)."""

    def __init__(self, cache: RecognitionCache | None = None, use_cache=True):
        if cache is None and use_cache:
            cache = RecognitionCache()
        self.cache = cache

    # public API --------------------------------------------------------

    def is_contractible(self, g: Graph, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
        return self._run("contractible", 0, g, budget, lambda c: self._contractible(g, c))

    def is_sphere(self, g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
        if d < -1:
            raise ValueError("sphere dimension must be >= -1")
        return self._run("sphere", d, g, budget, lambda c: self._sphere(g, d, c))

    def is_dgraph(self, g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
        if d < 0:
            raise ValueError("d-graph dimension must be >= 0")
        return self._run("dgraph", d, g, budget, lambda c: self._dgraph(g, d, c))

    def is_dgraph_with_boundary(self, g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
        if d < 1:
            raise ValueError("d-graph with boundary needs d >= 1")
        return self._run("dgraph_boundary", d, g, budget, lambda c: self._with_boundary(g, d, c))

    def is_ball(self, g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
        if d < 0:
            raise ValueError("ball dimension must be >= 0")
        return self._run("ball", d, g, budget, lambda c: self._ball(g, d, c))

    # machinery ---------------------------------------------------------

    def _run(self, kind, d, g, budget, search):
        ctx = _Ctx(budget)
        key = None
        if self.cache is not None and len(g) > 1:
            key = (kind, d, canonical_form(g).digest)
            tried = self.cache.get_unknown(key)
            if tried is not None and tried >= budget and self.cache.get(key) is None:
                return TopologyVerdict(Answer.UNKNOWN, (), 0, f"search budget of {budget} nodes exhausted")
        try:
            answer, witness, template, verts = search(ctx)
        except _OutOfBudget:
            if key is not None:
                self.cache.put_unknown(key, budget)
            return TopologyVerdict(
                Answer.UNKNOWN, (), ctx.spent - 1, f"search budget of {budget} nodes exhausted"
            )
        text = template.format(*(repr(v) for v in verts)) if template else None
        return TopologyVerdict(answer, witness, ctx.spent, text)

    def _memo(self, kind, d, g, ctx, compute):
        ctx.tick()
        if self.cache is None:
            return compute()
        cf = canonical_form(g)
        key = (kind, d, cf.digest)
        hit = self.cache.get(key)
        if hit is not None:
            inv = cf.inverse()
            answer, wit, template, verts = hit
            return (answer, tuple(inv[i] for i in wit), template, tuple(inv[i] for i in verts))
        res = compute()
        answer, wit, template, verts = res
        cert = cf.certificate
        self.cache.put(key, (answer, tuple(cert[v] for v in wit), template, tuple(cert[v] for v in verts)))
        return res

    def _contractible(self, g: Graph, ctx: _Ctx):
        n = len(g)
        if n == 0:
            ctx.tick()
            return _no("the empty graph is not contractible")
        if n == 1:
            ctx.tick()
            return _yes(g.vertices)
        for v in g.vertices:
            if g.degree(v) == n - 1:
                # a cone: peel the base in any order, the apex is left last
                ctx.tick()
                return _yes([u for u in g.vertices if u != v] + [v])
        if not is_connected(g):
            ctx.tick()
            return _no("graph is disconnected")
        chi = euler_characteristic(g)
        if chi != 1:
            ctx.tick()
            return _no(f"Euler characteristic is {chi}, not 1")
        if n >= _HOMOLOGY_PRUNE_MIN:
            betti = betti_numbers(g, field="GF2")
            if any(betti[1:]):
                ctx.tick()
                return _no(f"mod-2 Betti numbers {tuple(betti)} are not those of a point")
        return self._memo("contractible", 0, g, ctx, lambda: self._collapse_search(g, ctx))

    def _collapse_search(self, g, ctx):
        for x in _by_degree(g):
            s = unit_sphere(g, x)
            if self._contractible(s, ctx)[0] is not Answer.YES:
                continue
            rest = self._contractible(delete_vertex(g, x), ctx)
            if rest[0] is Answer.YES:
                return _yes((x,) + rest[1])
        return _no("no vertex removal keeps the graph contractible (exhaustive search)")

    def _sphere(self, g: Graph, d: int, ctx: _Ctx):
        if d == -1:
            ctx.tick()
            return _yes() if not g else _no("only the empty graph is the (-1)-sphere")
        if not g:
            ctx.tick()
            return _no(f"the empty graph is not a {d}-sphere")
        chi = euler_characteristic(g)
        if chi != 1 + (-1) ** d:
            ctx.tick()
            return _no(f"Euler characteristic is {chi}, a {d}-sphere has {1 + (-1) ** d}")
        return self._memo("sphere", d, g, ctx, lambda: self._sphere_search(g, d, ctx))

    def _sphere_search(self, g, d, ctx):
        dg = self._dgraph(g, d, ctx)
        if dg[0] is not Answer.YES:
            return dg
        for x in _by_degree(g):
            rest = self._contractible(delete_vertex(g, x), ctx)
            if rest[0] is Answer.YES:
                return _yes((x,) + rest[1])
        return _no(f"a {d}-graph, but no punctured copy is contractible")

    def _dgraph(self, g: Graph, d: int, ctx: _Ctx):
        if not g:
            ctx.tick()
            return _no("the empty graph is not a d-graph")
        return self._memo("dgraph", d, g, ctx, lambda: self._dgraph_search(g, d, ctx))

    def _dgraph_search(self, g, d, ctx):
        for x in g.vertices:
            if self._sphere(unit_sphere(g, x), d - 1, ctx)[0] is not Answer.YES:
                return _no(f"the unit sphere of {{0}} is not a {d - 1}-sphere", x)
        return _yes()

    def _with_boundary(self, g: Graph, d: int, ctx: _Ctx):
        if not g:
            ctx.tick()
            return _no("the empty graph has no manifold structure")
        return self._memo("dgraph_boundary", d, g, ctx, lambda: self._with_boundary_search(g, d, ctx))

    def _with_boundary_search(self, g, d, ctx):
        rim = []
        for x in g.vertices:
            s = unit_sphere(g, x)
            if self._sphere(s, d - 1, ctx)[0] is Answer.YES:
                continue
            if self._ball(s, d - 1, ctx)[0] is Answer.YES:
                rim.append(x)
                continue
            return _no(f"the unit sphere of {{0}} is neither a {d - 1}-sphere nor a {d - 1}-ball", x)
        return _yes(rim)

    def _ball(self, g: Graph, d: int, ctx: _Ctx):
        if d == 0:
            ctx.tick()
            return _yes(g.vertices) if len(g) == 1 else _no("only K_1 is the 0-ball")
        if not g:
            ctx.tick()
            return _no("the empty graph is not a ball")
        if not is_connected(g):
            ctx.tick()
            return _no("graph is disconnected")
        chi = euler_characteristic(g)
        if chi != 1:
            ctx.tick()
            return _no(f"Euler characteristic is {chi}, a ball has 1")
        return self._memo("ball", d, g, ctx, lambda: self._ball_search(g, d, ctx))

    def _ball_search(self, g, d, ctx):
        wb = self._with_boundary(g, d, ctx)
        if wb[0] is not Answer.YES:
            return wb
        rim = wb[1]
        if not rim:
            return _no("graph has empty boundary")
        bd = induced_subgraph(g, rim)
        if self._sphere(bd, d - 1, ctx)[0] is not Answer.YES:
            return _no(f"the boundary is not a {d - 1}-sphere")
        apex = fresh_vertex(g, "cone")
        cone = Graph(list(g.vertices) + [apex], g.edges() + [(apex, v) for v in rim])
        if self._sphere(cone, d, ctx)[0] is not Answer.YES:
            return _no(f"the cone over the boundary is not a {d}-sphere")
        return _yes(rim)


_default = Recognizer()


def default_recognizer() -> Recognizer:
    return _default


def is_contractible(g: Graph, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    return _default.is_contractible(g, budget)


def is_sphere(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    return _default.is_sphere(g, d, budget)


def is_dgraph(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    return _default.is_dgraph(g, d, budget)


def is_dgraph_with_boundary(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    return _default.is_dgraph_with_boundary(g, d, budget)


def is_ball(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    return _default.is_ball(g, d, budget)


def replay_contractible(g: Graph, witness, recognizer: Recognizer | None = None) -> bool:
    """Re-check a collapse order using only vertex deletions and unit spheres."""
    rec = recognizer or Recognizer()
    witness = list(witness)
    if not witness:
        return False
    cur = g
    for x in witness[:-1]:
        if x not in cur:
            return False
        if not rec.is_contractible(unit_sphere(cur, x)).yes:
            return False
        cur = delete_vertex(cur, x)
    return len(cur) == 1 and cur.vertices[0] == witness[-1]


def replay_sphere(g: Graph, d: int, witness, recognizer: Recognizer | None = None) -> bool:
    """Re-check a sphere certificate: d-graph, then puncture plus collapse order."""
    rec = recognizer or Recognizer()
    if d == -1:
        return not g and not witness
    witness = list(witness)
    if not witness or witness[0] not in g:
        return False
    if not rec.is_dgraph(g, d).yes:
        return False
    return replay_contractible(delete_vertex(g, witness[0]), witness[1:], rec)
