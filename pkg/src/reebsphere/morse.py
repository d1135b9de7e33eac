"""Critical points, indices and Morse classification of colorings."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .complex import (
    as_coloring,
    betti_numbers,
    center_manifold,
    euler_characteristic,
    Coloring,
)
from .errors import InvalidVertex
from .graph import Graph, connected_components, induced_subgraph, unit_sphere
from .io import _to_json_vertex, format_rational, graph_to_json
from .recognition import DEFAULT_BUDGET, Answer, Recognizer, default_recognizer


def stable_sphere(g: Graph, f, x, sign: int = -1) -> Graph:
    """S_f^-(x) (``sign=-1``) or S_f^+(x) (``sign=+1``) inside the unit sphere of ``x``."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    f = as_coloring(f)
    if x not in g:
        raise InvalidVertex(x)
    f.check_locally_injective(g, at=x)
    fx = f[x]
    if sign < 0:
        keep = [y for y in g.neighbors(x) if f[y] < fx]
    else:
        keep = [y for y in g.neighbors(x) if f[y] > fx]
    return induced_subgraph(g, keep)


def poincare_hopf_index(g: Graph, f, x) -> int:
    """i_f(x) = 1 - chi(S_f^-(x))."""
    return 1 - euler_characteristic(stable_sphere(g, f, x, -1))


def symmetric_index(g: Graph, f, x) -> Fraction:
    """j_f(x) = (i_f(x) + i_{-f}(x)) / 2."""
    lo = euler_characteristic(stable_sphere(g, f, x, -1))
    hi = euler_characteristic(stable_sphere(g, f, x, +1))
    return Fraction(2 - lo - hi, 2)


def symmetric_index_by_center(g: Graph, f, x) -> Fraction:
    """The same index through 1 - chi(S(x))/2 - chi(B_f(x))/2."""
    s = euler_characteristic(unit_sphere(g, x))
    b = euler_characteristic(center_manifold(g, f, x))
    return 1 - Fraction(s, 2) - Fraction(b, 2)


def green_diagonal(g: Graph, x) -> int:
    """Diagonal entry 1 - chi(S(x)) of the Green function."""
    return 1 - euler_characteristic(unit_sphere(g, x))


@dataclass(frozen=True)
class MorseClass:
    """Type of a center manifold.

    ``kind`` is one of ``regular``, ``extremum``, ``product``,
    ``non_morse``, ``unknown``.  Products carry the sphere dimensions
    ``(k, l)`` with ``k >= l``; ``by_betti_only`` marks dimensions where
    the product was recognized from Betti numbers alone.
    """

    kind: str
    k: int | None = None
    l: int | None = None
    by_betti_only: bool = False

    def __str__(self):
        if self.kind == "product":
            tag = f"S^{self.k}xS^{self.l}"
            return tag + ("?" if self.by_betti_only else "")
        return self.kind

    @property
    def is_morse(self) -> bool | None:
        if self.kind in ("unknown", "unclassified"):
            return None
        return self.kind != "non_morse"


REGULAR = MorseClass("regular")
EXTREMUM = MorseClass("extremum")
NON_MORSE = MorseClass("non_morse")
UNKNOWN_CLASS = MorseClass("unknown")
UNCLASSIFIED = MorseClass("unclassified")


def _product(k, l, by_betti_only=False):
    return MorseClass("product", max(k, l), min(k, l), by_betti_only)


def _kunneth(k, l):
    """Rational Betti numbers of S^k x S^l: coefficients of (1 + t^k)(1 + t^l)."""
    betti = [0] * (k + l + 1)
    for a in (0, k):
        for b in (0, l):
            betti[a + b] += 1
    return betti


def classify_center_manifold(
    b: Graph,
    d: int,
    critical: bool | None = None,
    budget: int = DEFAULT_BUDGET,
    recognizer: Recognizer | None = None,
) -> MorseClass:
    """Classify the center manifold ``b`` of a vertex in a d-graph.

    For ``d = 1`` the center manifold is always empty, which is also the
    (-1)-sphere; pass ``critical`` to tell regular points from extrema.
    """
    rec = recognizer or default_recognizer()
    if not b:
        if d == 1:
            return EXTREMUM if critical else REGULAR
        return EXTREMUM
    if d < 2:
        return NON_MORSE
    v = rec.is_sphere(b, d - 2, budget)
    if v.yes:
        return REGULAR
    if v.unknown:
        return UNKNOWN_CLASS
    if d == 2:
        return _product(0, 0) if len(b) == 4 and b.number_of_edges() == 0 else NON_MORSE
    comps = connected_components(b)
    if d == 3:
        if len(comps) != 2:
            return NON_MORSE
        verdicts = [rec.is_sphere(c, 1, budget) for c in comps]
        if any(x.unknown for x in verdicts):
            return UNKNOWN_CLASS
        return _product(1, 0) if all(x.yes for x in verdicts) else NON_MORSE
    if d == 4:
        if len(comps) == 2:
            verdicts = [rec.is_sphere(c, 2, budget) for c in comps]
            if any(x.unknown for x in verdicts):
                return UNKNOWN_CLASS
            return _product(2, 0) if all(x.yes for x in verdicts) else NON_MORSE
        if len(comps) == 1:
            dg = rec.is_dgraph(b, 2, budget)
            if dg.unknown:
                return UNKNOWN_CLASS
            if dg.yes and euler_characteristic(b) == 0 and betti_numbers(b) == [1, 2, 1]:
                return _product(1, 1)
        return NON_MORSE
    dg = rec.is_dgraph(b, d - 2, budget)
    if dg.unknown:
        return UNKNOWN_CLASS
    if not dg.yes:
        return NON_MORSE
    betti = betti_numbers(b)
    for l in range(0, (d - 2) // 2 + 1):
        k = d - 2 - l
        if betti == _kunneth(k, l):
            return _product(k, l, by_betti_only=True)
    return NON_MORSE


@dataclass(frozen=True)
class CriticalReport:
    vertex: object
    s_minus: Graph
    s_plus: Graph
    center: Graph
    i_minus: int
    i_plus: int
    j: Fraction
    one_sided_critical: bool | None
    symmetric_critical: bool | None
    morse_class: MorseClass

    def to_json(self) -> dict:
        return {
            "vertex": _to_json_vertex(self.vertex),
            "s_minus": [_to_json_vertex(v) for v in self.s_minus.vertices],
            "s_plus": [_to_json_vertex(v) for v in self.s_plus.vertices],
            "center": graph_to_json(self.center),
            "i_minus": self.i_minus,
            "i_plus": self.i_plus,
            "j": format_rational(self.j),
            "one_sided_critical": self.one_sided_critical,
            "symmetric_critical": self.symmetric_critical,
            "morse_class": str(self.morse_class),
        }


def classify_vertex(
    g: Graph,
    f,
    x,
    d: int,
    budget: int = DEFAULT_BUDGET,
    recognizer: Recognizer | None = None,
    center_class: bool = True,
) -> CriticalReport:
    """Stable/unstable spheres, indices, criticality and Morse type at ``x``.

    Criticality flags are ``None`` when recognition ran out of budget.
    ``center_class=False`` skips the center-manifold classification.
    """
    rec = recognizer or default_recognizer()
    f = as_coloring(f)
    lo = stable_sphere(g, f, x, -1)
    hi = stable_sphere(g, f, x, +1)
    center = center_manifold(g, f, x)
    i_minus = 1 - euler_characteristic(lo)
    i_plus = 1 - euler_characteristic(hi)
    lo_v = rec.is_contractible(lo, budget)
    hi_v = rec.is_contractible(hi, budget)
    one = None if lo_v.unknown else not lo_v.yes
    if lo_v.no or hi_v.no:
        sym = True
    elif lo_v.yes and hi_v.yes:
        sym = False
    else:
        sym = None
    if not center_class:
        cls = UNCLASSIFIED
    elif sym is None:
        cls = UNKNOWN_CLASS
    else:
        cls = classify_center_manifold(center, d, critical=sym, budget=budget, recognizer=rec)
    return CriticalReport(
        vertex=x,
        s_minus=lo,
        s_plus=hi,
        center=center,
        i_minus=i_minus,
        i_plus=i_plus,
        j=Fraction(i_minus + i_plus, 2),
        one_sided_critical=one,
        symmetric_critical=sym,
        morse_class=cls,
    )


def critical_reports(g: Graph, f, d: int, budget: int = DEFAULT_BUDGET, center_class=True) -> list:
    f = as_coloring(f)
    f.check_locally_injective(g)
    return [classify_vertex(g, f, x, d, budget, center_class=center_class) for x in g.vertices]


def symmetric_critical_points(g: Graph, f, budget: int = DEFAULT_BUDGET) -> list | None:
    """Vertices where S_f^- or S_f^+ is not contractible; ``None`` if undecided."""
    f = as_coloring(f)
    f.check_locally_injective(g)
    out = []
    for x in g.vertices:
        r = classify_vertex(g, f, x, 0, budget, center_class=False)
        if r.symmetric_critical is None:
            return None
        if r.symmetric_critical:
            out.append(x)
    return out


def is_morse(g: Graph, f, d: int, budget: int = DEFAULT_BUDGET):
    """``(verdict, reports)``; verdict is ``None`` if any vertex stayed unclassified."""
    reports = critical_reports(g, f, d, budget)
    classes = [r.morse_class for r in reports]
    if any(c.kind == "unknown" for c in classes):
        return None, reports
    return all(c.is_morse for c in classes), reports


def random_coloring(g: Graph, rng: random.Random) -> Coloring:
    """A uniformly random total order of the vertices, as values 1..n."""
    values = list(range(1, len(g) + 1))
    rng.shuffle(values)
    return Coloring(dict(zip(g.vertices, values)))


@dataclass(frozen=True)
class IndexExpectationEstimate:
    vertex: object
    sample_count: int
    mean_index: Fraction
    per_sample_sum_check: bool
    seed: int


def curvature_by_expectation(g: Graph, x, samples: int, seed: int = 0) -> IndexExpectationEstimate:
    """Average Poincare-Hopf index at ``x`` over random vertex orderings.

    Every sample also checks that the indices over all vertices sum to
    the Euler characteristic.
    """
    if x not in g:
        raise InvalidVertex(x)
    rng = random.Random(seed)
    chi = euler_characteristic(g)
    total = 0
    ok = True
    for _ in range(samples):
        f = random_coloring(g, rng)
        idx = {v: poincare_hopf_index(g, f, v) for v in g.vertices}
        ok = ok and sum(idx.values()) == chi
        total += idx[x]
    mean = Fraction(total, samples) if samples else Fraction(0)
    return IndexExpectationEstimate(x, samples, mean, ok, seed)
