"""
Balls, boundaries and sublevel sets
===================================

A d-ball is a d-graph with boundary whose boundary is a (d-1)-sphere.
Coning the boundary off gives a sphere.  Given a contractible subgraph K
of a sphere, take f = -1 on K and +1 elsewhere.  Then {f <= 0} in the
refinement is a ball, and its boundary is the level surface {f = 0}.

Run with ``python3 demos/balls_and_foliation.py``.
"""

from reebsphere import (
    Coloring,
    boundary,
    foliate,
    induced_subgraph,
    is_ball,
    is_contractible,
    level_surface,
    reeb_function_on_ball,
    sublevel_ball,
    sublevel_set,
    wu_characteristic,
    euler_characteristic,
)
from reebsphere.fixtures import fixture_graph, get_fixture
from reebsphere.generators import icosahedron, wheel_graph

# A wheel is a 2-ball: the hub is interior and the rim is a circle.
w5 = wheel_graph(5)
print("W5 is a 2-ball:", is_ball(w5, 2).answer.value, "boundary vertices", boundary(w5, 2).vertices)

# A ball also carries a function with exactly two critical points.
# Here every nonempty level is a 1-ball (a path).
rf = reeb_function_on_ball(w5, 2)
print("ball function:", {x: str(v) for x, v in rf.coloring.items()})
print("levels:", foliate(w5, rf.coloring, 2).verdicts())

# Sublevel balls inside the icosahedron.  K = vertices 0, 1, 7, 11 is a
# path, so it is contractible but not a ball.  Its neighbourhood is still
# a ball.
ball, sphere = sublevel_ball(icosahedron(), [0, 1, 7, 11], 2)
print(f"\nsublevel ball: {len(ball)} vertices, bounding circle of {len(sphere)} vertices")

# The same holds for the fixture "contractible_k_ball": two triangles sharing an
# edge plus a pendant vertex, placed in the interior of a 2-ball.
fx = get_fixture("contractible_k_ball")
g = fixture_graph("contractible_k_ball")
k = induced_subgraph(g, fx.subset)
print("K contractible:", is_contractible(k).answer.value, "| K a 2-ball:", is_ball(k, 2).answer.value)
f = Coloring({v: -1 if v in fx.subset else 1 for v in g.vertices})
b = sublevel_set(g, f, 0)
print("{f <= 0} is a 2-ball:", is_ball(b, 2).answer.value,
      "| boundary equals {f = 0}:", boundary(b, 2) == level_surface(g, f, 0))

# The Wu characteristic of a manifold with boundary is chi(G) - chi(boundary).
for name in ("w5", "three_ball", "glued_wheels"):
    h, d = fixture_graph(name), get_fixture(name).dim
    print(f"{name}: omega = {wu_characteristic(h)}, "
          f"chi - chi(boundary) = {euler_characteristic(h) - euler_characteristic(boundary(h, d))}")
