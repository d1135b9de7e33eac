"""Constructors for the small graphs used throughout the package."""

from __future__ import annotations

from .graph import Graph, join


def empty_graph() -> Graph:
    return Graph()


def complete_graph(n: int) -> Graph:
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    """P_n on vertices 0..n-1 (n vertices, n-1 edges)."""
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(n: int) -> Graph:
    """W_n: the cycle C_n on 1..n plus the hub 0."""
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(range(n + 1), rim + [(0, i) for i in range(1, n + 1)])


def zero_sphere() -> Graph:
    return Graph([0, 1])


def cross_polytope(d: int) -> Graph:
    """The d-sphere S^0 + ... + S^0 (d+1 factors) on 0..2d+1; 2i and 2i+1 are antipodal."""
    n = 2 * (d + 1)
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if i // 2 != j // 2])


def octahedron() -> Graph:
    return cross_polytope(2)


def sixteen_cell() -> Graph:
    return cross_polytope(3)


def icosahedron() -> Graph:
    """Top 0, upper ring 1..5, lower ring 6..10, bottom 11."""
    edges = []
    for i in range(1, 6):
        edges.append((0, i))
        edges.append((i, i % 5 + 1))
        edges.append((i, i + 5))
        edges.append((i, i % 5 + 6))
        edges.append((i + 5, i % 5 + 6))
        edges.append((11, i + 5))
    return Graph(range(12), edges)


def torus_grid(n: int = 4, m: int = 4) -> Graph:
    """Flat triangulated n x m torus with diagonals in the (1, 1) direction.

    A 2-graph for n, m >= 4.
    """
    def v(i, j):
        return (i % n) * m + (j % m)

    edges = set()
    for i in range(n):
        for j in range(m):
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                a, b = v(i, j), v(i + di, j + dj)
                edges.add((min(a, b), max(a, b)))
    return Graph(range(n * m), sorted(edges))


def glued_wheels(n: int = 5) -> Graph:
    """Two wheels W_n sharing one rim edge.

    A 2-graph with boundary whose interior is disconnected; not a 2-ball.
    """
    a_rim = [("a", i) for i in range(n)]
    b_rim = [("b", i) for i in range(n)]
    # identify a0=b0 and a1=b1
    b_rim[0], b_rim[1] = a_rim[0], a_rim[1]
    edges = []
    for hub, rim in (("A", a_rim), ("B", b_rim)):
        for i in range(n):
            edges.append((hub, rim[i]))
            edges.append((rim[i], rim[(i + 1) % n]))
    return Graph.from_edges(edges)


def cone(g: Graph, apex="apex") -> Graph:
    """g + K_1 with a named apex."""
    if apex in g:
        raise ValueError(f"apex {apex!r} already used")
    return Graph(list(g.vertices) + [apex], g.edges() + [(apex, v) for v in g.vertices])


def suspension(g: Graph) -> Graph:
    return join(g, zero_sphere())
