"""Seeded random graphs for sweeps and property tests."""

from __future__ import annotations

import numpy as np
from scipy.spatial import Delaunay

from .errors import InvalidOrderError
from .extremal import TriangulationCode
from .graph import Graph, ordered_edge


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    if n < 1:
        raise InvalidOrderError(f"need n >= 1, got {n}")
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        j = int(rng.integers(0, i))
        edges.add(ordered_edge(int(order[i]), int(order[j])))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def random_maximal_planar(n: int, rng: np.random.Generator) -> Graph:
    """Delaunay triangulation of ``n - 1`` random points plus a vertex at infinity.

    The extra vertex (index ``n - 1``) is joined to the convex hull, which
    closes the outer face into triangles.
    """
    if n < 4:
        raise InvalidOrderError(f"need n >= 4, got {n}")
    while True:
        pts = rng.random((n - 1, 2))
        try:
            tri = Delaunay(pts)
        except Exception:  # degenerate sample; draw again
            continue
        edges = set()
        for a, b, c in tri.simplices:
            edges.update({ordered_edge(int(a), int(b)), ordered_edge(int(b), int(c)), ordered_edge(int(a), int(c))})
        hull = {int(v) for e in tri.convex_hull for v in e}
        edges.update((v, n - 1) for v in hull)
        g = Graph.from_edges(n, edges)
        if g.m == 3 * n - 6:
            return g


def random_triangulation(k: int, rng: np.random.Generator) -> TriangulationCode:
    """Triangulation of the convex ``k``-gon by random recursive splitting."""
    diags: list[tuple[int, int]] = []
    stack = [tuple(range(k))]
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        t = int(rng.integers(2, len(poly)))
        if t > 2:
            diags.append(ordered_edge(poly[1], poly[t]))
        if t < len(poly) - 1:
            diags.append(ordered_edge(poly[t], poly[0]))
        stack.append(poly[1 : t + 1])
        stack.append(poly[t:] + poly[:1])
    return TriangulationCode(k, tuple(sorted(diags)))


def random_relabel(g: Graph, rng: np.random.Generator) -> Graph:
    return g.relabel([int(v) for v in rng.permutation(g.n)])


def random_spanning_subgraph(g: Graph, keep: float, rng: np.random.Generator) -> Graph:
    """Keep a spanning tree of ``g`` plus each other edge with probability ``keep``."""
    edges = list(g.edges())
    order = rng.permutation(len(edges))
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for idx in order:
        u, v = edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
        elif rng.random() < keep:
            chosen.append((u, v))
    return Graph.from_edges(g.n, chosen)


def random_planar_graph(n: int, rng: np.random.Generator, keep: float | None = None) -> Graph:
    """Connected planar graph: a random spanning subgraph of a random triangulation."""
    base = random_maximal_planar(n, rng)
    if keep is None:
        keep = float(rng.uniform(0.3, 1.0))
    return random_relabel(random_spanning_subgraph(base, keep, rng), rng)


def perturbed_fan(k: int, flips: int, rng: np.random.Generator) -> TriangulationCode:
    """Fan triangulation from corner 0 followed by ``flips`` random diagonal flips."""
    diags = {(0, i) for i in range(2, k - 1)}
    for _ in range(flips):
        if not diags:
            break
        current = sorted(diags)
        u, v = current[int(rng.integers(0, len(current)))]
        g = TriangulationCode(k, tuple(current)).to_graph()
        c, d = (w for w in g.adj[u] if g.has_edge(w, v))
        diags.remove((u, v))
        diags.add(ordered_edge(c, d))
    return TriangulationCode(k, tuple(sorted(diags)))
