"""
Critical points, indices and Morse types
========================================

For a locally injective coloring f, the stable sphere S^-(x) is the part
of the unit sphere where f is smaller.  The vertex is critical when S^-(x)
is not contractible.  The Poincare-Hopf index is i(x) = 1 - chi(S^-(x)),
and the indices sum to chi(G).  The symmetric index j averages f and -f.

Run with ``python3 demos/torus_and_morse.py``.
"""

import random
from fractions import Fraction

from reebsphere import (
    critical_reports,
    curvature_by_expectation,
    euler_characteristic,
    poincare_hopf_index,
    random_coloring,
    symmetric_critical_points,
    symmetric_index,
)
from reebsphere.fixtures import fixture_graph
from reebsphere.generators import octahedron

rng = random.Random(2024)

# A torus is not a sphere, so every coloring has at least three critical points.
torus = fixture_graph("torus4x4")
counts = [len(symmetric_critical_points(torus, random_coloring(torus, rng))) for _ in range(20)]
print("torus4x4: chi =", euler_characteristic(torus), "| critical counts", sorted(counts))

# Poincare-Hopf holds for every coloring of every graph.
f = random_coloring(torus, rng)
print("sum of indices:", sum(poincare_hopf_index(torus, f, x) for x in torus.vertices))
print("sum of symmetric indices:", sum(symmetric_index(torus, f, x) for x in torus.vertices))

# The per-vertex report: stable spheres, indices and the type of the
# center manifold B_f(x) = {f = f(x)} inside the unit sphere.
for r in critical_reports(torus, f, 2):
    if r.symmetric_critical:
        print(f"  {r.vertex}: i- = {r.i_minus}, i+ = {r.i_plus}, j = {r.j}, type {r.morse_class}")

# Averaging the index over random colorings gives curvature.  On the
# octahedron each vertex has curvature 1 - 4/2 + 4/3 = 1/3.
est = curvature_by_expectation(octahedron(), 0, 2000, seed=1)
print(f"\noctahedron: mean index {float(est.mean_index):.3f} vs curvature {float(Fraction(1, 3)):.3f}")
