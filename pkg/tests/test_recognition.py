import random
from functools import lru_cache

import pytest

from conftest import fixture_params, fx, random_graphs, random_relabel
from reebsphere.complex import euler_characteristic
from reebsphere.fixtures import fixtures, get_fixture
from reebsphere.generators import (
    complete_graph,
    cross_polytope,
    cycle_graph,
    octahedron,
    path_graph,
    sixteen_cell,
    wheel_graph,
    zero_sphere,
)
from reebsphere.graph import Graph, delete_vertex, join, unit_sphere
from reebsphere.recognition import (
    Answer,
    RecognitionCache,
    Recognizer,
    is_ball,
    is_contractible,
    is_dgraph,
    is_dgraph_with_boundary,
    is_sphere,
    replay_contractible,
    replay_sphere,
)


# ------------------------------------------------------------------ oracle

def _key(g):
    return (g.vertices, tuple(g.edges()))


@lru_cache(maxsize=None)
def _naive_contractible(key):
    vs, es = key
    g = Graph(vs, es)
    if len(g) == 1:
        return True
    if len(g) == 0:
        return False
    return any(
        _naive_contractible(_key(unit_sphere(g, x))) and _naive_contractible(_key(delete_vertex(g, x)))
        for x in g.vertices
    )


def naive_contractible(g):
    return _naive_contractible(_key(g))


def naive_sphere(g, d):
    if d == -1:
        return len(g) == 0
    if not g or not all(naive_sphere(unit_sphere(g, x), d - 1) for x in g.vertices):
        return False
    return any(naive_contractible(delete_vertex(g, x)) for x in g.vertices)


def test_contractible_against_naive_recursion():
    for g in random_graphs(31, 120, max_n=7):
        assert is_contractible(g).yes == naive_contractible(g), g


def test_sphere_against_naive_recursion():
    for g in random_graphs(32, 80, max_n=7):
        for d in (0, 1, 2):
            assert is_sphere(g, d).yes == naive_sphere(g, d), (g, d)


# --------------------------------------------------------------- examples

def test_base_cases():
    assert is_contractible(complete_graph(1)).yes
    assert is_contractible(Graph()).no
    assert is_sphere(Graph(), -1).yes
    assert is_sphere(complete_graph(1), -1).no
    assert is_sphere(zero_sphere(), 0).yes
    assert is_ball(complete_graph(1), 0).yes
    assert is_ball(zero_sphere(), 0).no


def test_named_examples():
    assert is_sphere(octahedron(), 2).yes
    assert is_sphere(wheel_graph(5), 2).no
    assert is_dgraph(wheel_graph(5), 2).no
    assert is_ball(wheel_graph(5), 2).yes
    assert is_contractible(delete_vertex(octahedron(), 0)).yes
    assert is_contractible(cycle_graph(4)).no
    assert is_contractible(complete_graph(4)).yes
    assert is_ball(path_graph(3), 1).yes
    assert is_ball(path_graph(2), 1).no  # its cone is a filled triangle, not a circle


def test_glued_wheels_has_boundary_but_is_not_a_ball():
    g = fx("glued_wheels")
    v = is_dgraph_with_boundary(g, 2)
    assert v.yes and len(v.witness) == 8
    assert is_contractible(g).yes
    assert is_ball(g, 2).no


def test_torus_cone_contractible_but_not_a_3graph():
    g = fx("torus_cone")
    assert is_contractible(g).yes
    v = is_dgraph(g, 3)
    assert v.no and "not a 2-sphere" in v.obstruction


@pytest.mark.parametrize("name", fixture_params())
def test_manifest_verdicts(name):
    f = get_fixture(name)
    g = fx(name)
    for kind, expected in f.checks.items():
        if kind == "contractible":
            v = is_contractible(g)
        elif kind == "sphere":
            v = is_sphere(g, f.dim)
        elif kind == "dgraph":
            v = is_dgraph(g, f.dim)
        elif kind == "dgraph-boundary":
            v = is_dgraph_with_boundary(g, f.dim)
        else:
            v = is_ball(g, f.dim)
        assert v.answer.value == expected, (kind, v)


# ---------------------------------------------------------------- witnesses

@pytest.mark.parametrize("name", fixture_params())
def test_witness_replay(name):
    f = get_fixture(name)
    g = fx(name)
    c = is_contractible(g)
    if c.yes:
        assert replay_contractible(g, c.witness)
    s = is_sphere(g, f.dim)
    if s.yes:
        assert replay_sphere(g, f.dim, s.witness)


def test_replay_rejects_bad_witness():
    g = path_graph(4)
    assert replay_contractible(g, [0, 1, 2, 3])
    assert not replay_contractible(g, [1, 0, 2, 3])  # deleting 1 first disconnects
    assert not replay_contractible(g, [])
    assert not replay_sphere(octahedron(), 2, [])


# ---------------------------------------------------- memoization soundness

SMALL = [f.name for f in fixtures() if len(f.graph()) <= 26]


@pytest.mark.parametrize("name", SMALL)
def test_cache_on_and_off_agree(name):
    f = get_fixture(name)
    g = fx(name)
    on, off = Recognizer(), Recognizer(use_cache=False)
    for rec in (on, off):
        rec.results = (
            rec.is_contractible(g).answer,
            rec.is_sphere(g, f.dim).answer,
            rec.is_dgraph(g, f.dim).answer,
            rec.is_ball(g, f.dim).answer,
        )
    assert on.results == off.results


@pytest.mark.parametrize("name", fixture_params())
def test_isomorphism_invariance(name):
    f = get_fixture(name)
    g = fx(name)
    h = random_relabel(g, random.Random(name))
    rec = Recognizer()
    assert rec.is_sphere(g, f.dim).answer == rec.is_sphere(h, f.dim).answer
    c = rec.is_contractible(h)
    assert c.answer == rec.is_contractible(g).answer
    if c.yes:  # cached witness translated back into h's labels
        assert replay_contractible(h, c.witness)


def test_shared_cache_between_recognizers():
    cache = RecognitionCache()
    a, b = Recognizer(cache), Recognizer(cache)
    a.is_sphere(octahedron(), 2)
    size = len(cache)
    assert size > 0
    assert b.is_sphere(octahedron(), 2).yes
    assert len(cache) == size


# ------------------------------------------------------------- budgets

def test_budget_exhaustion_is_unknown_then_recoverable():
    rec = Recognizer()
    g = fx("icosahedron")
    v = rec.is_sphere(g, 2, budget=2)
    assert v.unknown and v.witness == ()
    assert rec.is_sphere(g, 2, budget=2).unknown
    assert rec.is_sphere(g, 2).yes


def test_dimension_validation():
    with pytest.raises(ValueError):
        is_sphere(octahedron(), -2)
    with pytest.raises(ValueError):
        is_dgraph(octahedron(), -1)
    with pytest.raises(ValueError):
        is_dgraph_with_boundary(octahedron(), 0)
    with pytest.raises(ValueError):
        is_ball(octahedron(), -1)


# --------------------------------------------------------- structural laws

@pytest.mark.parametrize("p,q", [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2)])
def test_join_of_spheres_is_a_sphere(p, q):
    g = join(cross_polytope(p), cycle_graph(5) if q == 1 else cross_polytope(q))
    assert is_sphere(g, p + q + 1).yes


def test_cone_is_contractible():
    for g in random_graphs(41, 20, max_n=8):
        assert is_contractible(join(g, complete_graph(1))).yes


@pytest.mark.parametrize("g", [cycle_graph(5), octahedron(), sixteen_cell()], ids=["C5", "octahedron", "16-cell"])
def test_every_puncture_of_a_sphere_is_contractible(g):
    for x in g.vertices:
        assert is_contractible(delete_vertex(g, x)).yes


def test_contractible_implies_euler_one_on_random_graphs():
    for g in random_graphs(42, 60):
        if is_contractible(g).yes:
            assert euler_characteristic(g) == 1


def test_verdict_json():
    v = is_sphere(octahedron(), 2)
    j = v.to_json()
    assert j["answer"] == "yes" and len(j["witness"]) == 6
    assert is_sphere(wheel_graph(5), 2).to_json()["obstruction"]
    assert Answer("unknown") is Answer.UNKNOWN
