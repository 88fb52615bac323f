"""Canonical labelling for small graphs.

Degree partition, equitable refinement, then individualise-and-refine
backtracking.  Leaves are compared by their relabelled adjacency
bitmasks; automorphisms discovered between equal leaves prune sibling
branches in the same orbit (the usual nauty-style rule restricted to
automorphisms that fix the current prefix pointwise).
"""

from __future__ import annotations

from .errors import CapabilityError
from .graph import Graph
from .graph6 import graph6_encode

MAX_ORDER = 32


def _masks(g: Graph) -> list[int]:
    out = []
    for nbrs in g.adj:
        m = 0
        for u in nbrs:
            m |= 1 << u
        out.append(m)
    return out


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    cells = [c for c in cells]
    splitter = 0
    while splitter < len(cells):
        smask = 0
        for v in cells[splitter]:
            smask |= 1 << v
        new_cells: list[list[int]] = []
        split_any = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                split_any = True
                new_cells.extend(groups[k] for k in sorted(groups))
        if split_any:
            cells = new_cells
            splitter = 0
        else:
            splitter += 1
    return cells


def _leaf_code(masks: list[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for p, v in enumerate(order):
        pos[v] = p
    code = []
    for v in order:
        m = masks[v]
        row = 0
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        code.append(row)
    return tuple(code)


class _Search:
    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.masks = _masks(g)
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self) -> list[int]:
        by_degree: dict[int, list[int]] = {}
        for v in range(self.n):
            by_degree.setdefault(self.masks[v].bit_count(), []).append(v)
        cells = _refine(self.masks, [by_degree[d] for d in sorted(by_degree)])
        self._descend(cells, [])
        assert self.best_order is not None
        return self.best_order

    def _descend(self, cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        explored: list[int] = []
        for v in cells[target]:
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            self._descend(_refine(self.masks, child), prefix + [v])

    def _leaf(self, order: list[int]) -> None:
        code = _leaf_code(self.masks, order)
        if self.best_code is None or code > self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            # best_order[p] and order[p] play the same role for every p
            gamma = [0] * self.n
            for a, b in zip(order, self.best_order):
                gamma[a] = b
            self.automorphisms.append(gamma)

    def _same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x in range(self.n):
                rx, ry = find(x), find(g[x])
                if rx != ry:
                    parent[rx] = ry
        rv = find(v)
        return any(find(u) == rv for u in explored)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` with ``order[p]`` the vertex placed at position ``p``."""
    if g.n > MAX_ORDER:
        raise CapabilityError(f"canonical labelling supports n <= {MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return []
    return _Search(g).run()


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """Relabelling-invariant text key (graph6 of the canonical graph)."""
    return graph6_encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if max(g.n, h.n) > MAX_ORDER:
        raise CapabilityError(f"isomorphism test supports n <= {MAX_ORDER}, got {max(g.n, h.n)}")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
