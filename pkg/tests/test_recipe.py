import random

import pytest

from reebsphere.canon import are_isomorphic
from reebsphere.complex import betti_numbers
from reebsphere.errors import EmptyFactor, NotRefinableEdge, RecipeError, ReebError
from reebsphere.fixtures import recipe_names
from reebsphere.generators import cycle_graph, octahedron, path_graph
from reebsphere.recipe import evaluate, parse_recipe
from reebsphere.recognition import is_sphere


def test_join_and_product_precedence():
    tree = parse_recipe("S0 ⊕ C4 × P2 + K1")
    assert tree[0] == "join" and tree[2][0] == "join"
    assert tree[2][3][0] == "product"
    assert len(evaluate("S0 ⊕ C4 × P2 + K1")) == 2 + 4 * 2 * 0 + len(evaluate("C4 × P2")) + 1


def test_ascii_and_unicode_operators_agree():
    assert evaluate("S0 + S0 + S0") == evaluate("S0 ⊕ S0 ⊕ S0")
    assert evaluate("C4 * C4") == evaluate("C4 × C4")


def test_named_constructions():
    assert are_isomorphic(evaluate("S0 ⊕ S0 ⊕ S0"), octahedron())
    assert len(evaluate("B(octahedron)")) == 26
    assert betti_numbers(evaluate("C4 × C4")) == [1, 2, 1]
    assert are_isomorphic(evaluate("C5"), cycle_graph(5))
    assert are_isomorphic(evaluate("P3"), path_graph(3))
    assert len(evaluate("cone(C5)")) == 6
    assert len(evaluate("puncture(octahedron)")) == 5
    assert is_sphere(evaluate("refine(octahedron, 2)"), 2).yes
    assert evaluate("empty") == evaluate("K0")
    assert len(evaluate("(S0 ⊕ (S0))")) == 4


def test_fixture_names_resolve():
    assert are_isomorphic(evaluate("torus_cone", recipe_names()), evaluate("cone(torus4x4)"))
    with pytest.raises(RecipeError):
        evaluate("torus_cone")


@pytest.mark.parametrize(
    "text,pos",
    [("", 0), ("C4 ⊕", 4), ("(C4", 3), ("C4)", 2), ("foo", 0), ("C4 $ C4", 3), ("B(C4, 2)", 0),
     ("refine(C4)", 0), ("cone(C4,)", 8), ("K99", 0), ("C2", 0), ("zap(C4)", 0)],
)
def test_errors_carry_positions(text, pos):
    with pytest.raises(RecipeError) as exc:
        evaluate(text)
    assert exc.value.position == pos


def test_semantic_errors():
    with pytest.raises(EmptyFactor):
        evaluate("C4 × empty")
    with pytest.raises(NotRefinableEdge):
        evaluate("refine(K4, 3)")
    with pytest.raises(RecipeError):
        evaluate("B(K10) × B(K10)")
    with pytest.raises(RecipeError):
        parse_recipe(42)


def test_fuzz_only_raises_recipe_family_errors():
    rng = random.Random(2024)
    alphabet = list("CPKWSB()⊕+×*,  0123456789x_é\x00\n") + ["cone(", "refine(", "puncture(", "empty", "octahedron"]
    names = recipe_names()
    for _ in range(100_000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        try:
            evaluate(text, names)
        except ReebError:
            pass


def test_fuzz_random_bytes():
    rng = random.Random(7)
    for _ in range(2000):
        text = bytes(rng.randrange(256) for _ in range(rng.randint(0, 20))).decode("latin-1")
        try:
            evaluate(text)
        except ReebError:
            pass
