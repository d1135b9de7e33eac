"""Exact canonical labeling of graphs.

The labeling is computed in three layers:

* a disconnected graph is labeled component by component, components
  ordered by their own canonical digests;
* a graph whose complement is disconnected (a join) is labeled the same
  way over the complement's components;
* everything else goes through individualization-refinement: colour
  refinement to an equitable partition, then branching on the cells of the
  first non-singleton cell.  The canonical leaf is the one minimizing
  (sequence of node invariants, relabeled edge list).  Subtrees are pruned
  by node invariants and by automorphisms discovered along the way.

Every layer maps a graph to an isomorphic graph that depends only on the
isomorphism class, so the digest (the exact encoding of that graph) is
equal for two graphs precisely when they are isomorphic.
"""

from __future__ import annotations

import hashlib
from array import array
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph


@dataclass(frozen=True)
class CanonicalForm:
    """Digest plus the relabeling that produced it.

    ``certificate`` maps every input vertex to its canonical label
    ``0..n-1``; relabeling the graph with it gives the canonical graph.
    """

    digest: bytes
    certificate: dict = field(compare=False, hash=False)

    def hexdigest(self) -> str:
        return hashlib.sha256(self.digest).hexdigest()

    def inverse(self) -> dict:
        return {lab: v for v, lab in self.certificate.items()}


def canonical_form(g: Graph) -> CanonicalForm:
    return _canonical_form_cached(g)


@lru_cache(maxsize=200_000)
def _canonical_form_cached(g: Graph) -> CanonicalForm:
    n = len(g)
    pos = g.index
    adj = [frozenset(pos[u] for u in g.neighbors(v)) for v in g.vertices]
    labels, edges = _label(n, adj)
    return CanonicalForm(_encode(n, edges), {v: labels[i] for i, v in enumerate(g.vertices)})


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class on ``0..n-1``."""
    cert = canonical_form(g).certificate
    return Graph(range(len(g)), [(cert[a], cert[b]) for a, b in g.edges()])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g).digest == canonical_form(h).digest


def _encode(n, edges) -> bytes:
    flat = array("I", [n])
    for a, b in edges:
        flat.append(a)
        flat.append(b)
    return flat.tobytes()


def _sorted_edges(adj, labels):
    out = []
    for v, nb in enumerate(adj):
        lv = labels[v]
        for u in nb:
            lu = labels[u]
            if lv < lu:
                out.append((lv, lu))
    out.sort()
    return tuple(out)


def _components(n, adj, complement=False):
    seen = [False] * n
    comps = []
    everything = set(range(n))
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            nbrs = (everything - adj[u] - {u}) if complement else adj[u]
            for w in nbrs:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _label(n, adj):
    """Return (labels, canonical sorted edge tuple) for a graph on ``0..n-1``."""
    if n <= 1:
        return [0] * n, ()
    comps = _components(n, adj)
    if len(comps) == 1:
        comps = _components(n, adj, complement=True)
    if len(comps) > 1:
        return _label_parts(n, adj, comps)
    return _ir_search(n, adj)


def _label_parts(n, adj, parts):
    keyed = []
    for part in parts:
        local = {v: i for i, v in enumerate(part)}
        sub = [frozenset(local[u] for u in adj[v] if u in local) for v in part]
        lab, edges = _label(len(part), sub)
        keyed.append(((len(part), edges), part, lab))
    keyed.sort(key=lambda t: t[0])
    labels = [0] * n
    offset = 0
    for _, part, lab in keyed:
        for i, v in enumerate(part):
            labels[v] = offset + lab[i]
        offset += len(part)
    return labels, _sorted_edges(adj, labels)


def _refine(adj, colors):
    """Colour refinement to the coarsest equitable partition finer than ``colors``.

    Colours are ranks in a canonical order, so the result depends only on
    the (graph, initial colouring) pair up to isomorphism.  Returns the
    colouring and an isomorphism-invariant fingerprint of the final
    quotient structure.
    """
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            return colors, hash(tuple(uniq))
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        k = len(uniq)


def _individualize(colors, v):
    sig = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    uniq = sorted(set(sig))
    rank = {s: i for i, s in enumerate(uniq)}
    return [rank[s] for s in sig]


def _orbits(n, gens):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        self.best_key = None
        self.best_labels = None
        self.autos = []

    def _prunable(self, traces):
        if self.best_key is None:
            return False
        best = self.best_key[0]
        for a, b in zip(traces, best):
            if a != b:
                return a > b
        # equal on the common prefix: a longer trace sequence sorts later
        return len(traces) > len(best)

    def run(self):
        colors, tr = _refine(self.adj, [0] * self.n)
        self._visit(colors, (tr,), ())
        return self.best_labels, self.best_key[1]

    def _visit(self, colors, traces, prefix):
        if self._prunable(traces):
            return
        n = self.n
        if len(set(colors)) == n:
            self._leaf(colors, traces)
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        explored = []
        for w in cell:
            if explored:
                stab = [g for g in self.autos if all(g[p] == p for p in prefix)]
                if stab:
                    orb = _orbits(n, stab)
                    if any(orb[w] == orb[u] for u in explored):
                        continue
            child, tr = _refine(self.adj, _individualize(colors, w))
            self._visit(child, traces + (tr,), prefix + (w,))
            explored.append(w)

    def _leaf(self, labels, traces):
        key = (traces, _sorted_edges(self.adj, labels))
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_labels = labels
        elif key == self.best_key:
            inv = [0] * self.n
            for v, lab in enumerate(self.best_labels):
                inv[lab] = v
            gamma = [inv[labels[v]] for v in range(self.n)]
            if any(gamma[v] != v for v in range(self.n)):
                self.autos.append(gamma)


def _ir_search(n, adj):
    return _Search(n, adj).run()
