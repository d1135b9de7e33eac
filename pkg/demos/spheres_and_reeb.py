"""
Spheres, punctures and two-critical-point functions
===================================================

A graph is a d-sphere when every unit sphere is a (d-1)-sphere and some
vertex can be removed to leave a contractible graph.  Numbering the
vertices along "remove that vertex, then collapse the rest" gives a
function with exactly two critical points: a minimum and a maximum.

Run with ``python3 demos/spheres_and_reeb.py``.
"""

from reebsphere import (
    build_reeb_function,
    certify_sphere_via_reeb,
    euler_characteristic,
    f_vector,
    foliate,
    is_sphere,
    symmetric_critical_points,
)
from reebsphere.generators import cross_polytope, icosahedron, octahedron

# The cross-polytopes are the smallest spheres: S^0 is two points, and the
# join with S^0 raises the dimension by one.  The Euler characteristic
# alternates 2, 0, 2, 0.
for d in range(4):
    g = cross_polytope(d)
    print(f"S^{d}: f-vector {f_vector(g)}, chi = {euler_characteristic(g)}")

# Recognition returns a verdict with a witness.  For a sphere, the witness
# is the puncture vertex followed by a collapse order of the punctured graph.
ico = icosahedron()
verdict = is_sphere(ico, 2)
print("\nicosahedron is a 2-sphere:", verdict.answer.value, "witness", verdict.witness)

# The Reeb function numbers the vertices in witness order.
rf = build_reeb_function(ico, 2)
print("Reeb function values:", {x: str(v) for x, v in rf.coloring.items()})
print("critical points:", symmetric_critical_points(ico, rf.coloring))

# Conversely, two critical points on a 2-graph certify a sphere.
print("certified by the function:", certify_sphere_via_reeb(ico, rf.coloring, 2).answer.value)

# Between consecutive values, the level surface {f = c} is a curve in the
# Barycentric refinement.  On a sphere every nonempty level is a circle.
for level in foliate(octahedron(), build_reeb_function(octahedron(), 2).coloring, 2).levels:
    print(f"  level c = {level.c}: {len(level.surface)} vertices, {level.verdict}")
