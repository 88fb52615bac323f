"""Immutable simple undirected graphs and the standard constructions.

Vertices are the integers ``0..n-1``.  Named constructions follow the
usual labelling: in ``phi(n)`` and ``cal_h(n)`` the joined edge is
``{0, 1}`` and the cycle (or path) runs ``2, 3, ..., n-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EdgeStateError, InvalidOrderError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as sorted neighbour tuples.

    Instances are validated on construction and never mutated; the edit
    helpers return new graphs.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidOrderError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise PreconditionError(
                f"adjacency has {len(self.adj)} rows for n={self.n}"
            )
        total = 0
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if u <= prev:
                    raise PreconditionError(f"neighbours of {v} not strictly increasing")
                if u == v:
                    raise PreconditionError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise PreconditionError(f"neighbour {u} of {v} out of range")
                prev = u
            total += len(nbrs)
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not _contains(self.adj[u], v):
                    raise PreconditionError(f"asymmetric adjacency {v}->{u}")
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if v in sets[u]:
                raise PreconditionError(f"duplicate edge ({u}, {v})")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in sets))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _contains(self.adj[u], v)

    def edges(self) -> Iterator[Edge]:
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if u > v:
                    yield (v, u)

    def dominating_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == self.n - 1]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps: list[list[int]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        queue.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in self.adj[v]:
                    if color[u] < 0:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for v, nbrs in enumerate(self.adj):
            a[v, list(nbrs)] = 1
        return a

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise PreconditionError("repeated vertex in induced_subgraph")
        rows = []
        for v in vertices:
            rows.append(tuple(sorted(index[u] for u in self.adj[v] if u in index)))
        return Graph(len(vertices), tuple(rows))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return self.induced_subgraph([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise PreconditionError("relabel needs a permutation of range(n)")
        rows: list[tuple[int, ...]] = [()] * self.n
        for v, nbrs in enumerate(self.adj):
            rows[perm[v]] = tuple(sorted(perm[u] for u in nbrs))
        return Graph(self.n, tuple(rows))


def ordered_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _contains(row: tuple[int, ...], x: int) -> bool:
    # rows are short; linear scan beats bisect overhead at these sizes
    return x in row


def _check_order(name: str, k: int, least: int) -> None:
    if k < least:
        raise InvalidOrderError(f"{name} needs order >= {least}, got {k}")


def empty_graph(k: int) -> Graph:
    _check_order("empty_graph", k, 0)
    return Graph(k, ((),) * k)


def path_graph(k: int) -> Graph:
    _check_order("path_graph", k, 1)
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    _check_order("cycle_graph", k, 3)
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete_graph(k: int) -> Graph:
    _check_order("complete_graph", k, 1)
    return Graph(k, tuple(tuple(u for u in range(k) if u != v) for v in range(k)))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise InvalidOrderError(f"complete_bipartite needs s, t >= 1, got ({s}, {t})")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    rows = g.adj + tuple(tuple(u + shift for u in nbrs) for nbrs in h.adj)
    return Graph(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every cross edge; ``g`` first."""
    n = g.n + h.n
    left = tuple(range(g.n))
    right = tuple(range(g.n, n))
    rows = [nbrs + right for nbrs in g.adj]
    rows += [left + tuple(u + g.n for u in nbrs) for nbrs in h.adj]
    return Graph(n, tuple(rows))


def phi(n: int) -> Graph:
    """Edge ``{0, 1}`` joined to the cycle ``2, 3, ..., n-1``."""
    _check_order("phi", n, 5)
    return join(path_graph(2), cycle_graph(n - 2))


def cal_h(n: int) -> Graph:
    """``phi(n)`` minus the cycle edge ``{2, n-1}``; maximal planar."""
    _check_order("cal_h", n, 5)
    return remove_edge(phi(n), 2, n - 1)


def fan_apex(n: int) -> Graph:
    """``P_2`` joined with ``P_{n-2}``: the conjectured planar extremal graph."""
    _check_order("fan_apex", n, 4)
    return join(path_graph(2), path_graph(n - 2))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise EdgeStateError(f"loop request at vertex {u}")
    if g.has_edge(u, v):
        raise EdgeStateError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] = tuple(sorted(rows[u] + (v,)))
    rows[v] = tuple(sorted(rows[v] + (u,)))
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise EdgeStateError(f"loop request at vertex {u}")
    if not g.has_edge(u, v):
        raise EdgeStateError(f"edge ({u}, {v}) not present")
    rows = list(g.adj)
    rows[u] = tuple(x for x in rows[u] if x != v)
    rows[v] = tuple(x for x in rows[v] if x != u)
    return Graph(g.n, tuple(rows))


BUILTINS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "phi": phi,
    "cal_h": cal_h,
    "fan_apex": fan_apex,
}
