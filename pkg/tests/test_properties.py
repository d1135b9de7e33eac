"""Property-based checks of the invariants on arbitrary small graphs."""

import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from reebsphere.canon import canonical_form
from reebsphere.complex import (
    Coloring,
    barycentric_refinement,
    betti_numbers,
    euler_characteristic,
    level_surface,
    sublevel_set,
    superlevel_set,
)
from reebsphere.graph import Graph, join, relabel
from reebsphere.io import dumps_graph, loads_graph
from reebsphere.morse import poincare_hopf_index, symmetric_index, symmetric_index_by_center
from reebsphere.recognition import Recognizer, is_contractible


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def colored_graphs(draw):
    g = draw(graphs())
    values = draw(st.permutations(list(range(len(g)))))
    return g, Coloring(dict(zip(g.vertices, values)))


SETTINGS = settings(max_examples=150, deadline=None)


@SETTINGS
@given(colored_graphs())
def test_poincare_hopf(gf):
    g, f = gf
    assert sum(poincare_hopf_index(g, f, x) for x in g.vertices) == euler_characteristic(g)


@SETTINGS
@given(colored_graphs())
def test_index_identity(gf):
    g, f = gf
    for x in g.vertices:
        assert symmetric_index(g, f, x) == symmetric_index_by_center(g, f, x)


@SETTINGS
@given(colored_graphs())
def test_reversed_poincare_hopf(gf):
    g, f = gf
    h = f.negated()
    assert sum(poincare_hopf_index(g, h, x) for x in g.vertices) == euler_characteristic(g)


@SETTINGS
@given(graphs())
def test_euler_poincare(g):
    b = betti_numbers(g)
    assert sum((-1) ** k * x for k, x in enumerate(b)) == euler_characteristic(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_refinement_preserves_homology(g):
    assert betti_numbers(barycentric_refinement(g)) == betti_numbers(g)


@SETTINGS
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    names = [("v", k) for k in range(len(g))]
    rnd.shuffle(names)
    h = relabel(g, dict(zip(g.vertices, names)))
    assert canonical_form(g).digest == canonical_form(h).digest


@SETTINGS
@given(graphs())
def test_json_round_trip(g):
    assert loads_graph(dumps_graph(g)) == g


@SETTINGS
@given(graphs())
def test_cone_contractible(g):
    assert is_contractible(join(g, Graph([0]))).yes


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_cache_on_off_agree(g):
    assert Recognizer().is_contractible(g).answer == Recognizer(use_cache=False).is_contractible(g).answer


@SETTINGS
@given(colored_graphs())
def test_level_sets_split_refinement(gf):
    g, f = gf
    for c in f.gaps():
        lo, hi, mid = sublevel_set(g, f, c), superlevel_set(g, f, c), level_surface(g, f, c)
        assert set(lo.vertices) & set(hi.vertices) == set(mid.vertices)
        assert len(lo) + len(hi) - len(mid) == len(barycentric_refinement(g))
