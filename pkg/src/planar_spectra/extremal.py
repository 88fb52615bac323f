"""Exhaustive search over maximal planar graphs with a dominating vertex.

Such a graph is an apex (vertex 0) joined to a maximal outerplanar graph,
i.e. to a triangulated convex polygon, so the family at order ``n`` is
indexed by the triangulations of the ``(n-1)``-gon.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import CapabilityError, EdgeStateError, PreconditionError
from .graph import Graph, add_edge, fan_apex, ordered_edge, remove_edge
from .graph6 import graph6_encode
from .isomorphism import canonical_form, canonical_graph
from .spectral import (
    DEFAULT_TOL,
    TOL_FLOOR,
    SpectralResult,
    normalized_eigenvector,
    quadratic_form,
    spectral_radius,
)

log = logging.getLogger(__name__)

MAX_POLYGON = 18
MAX_FAMILY_ORDER = 19
MAX_SEARCH_ORDER = 16


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    if k <= 1:
        return 1
    return sum(catalan(i) * catalan(k - 1 - i) for i in range(k))


@dataclass(frozen=True)
class TriangulationCode:
    """Triangulation of the convex ``k``-gon with corners ``0..k-1``."""

    k: int
    diagonals: tuple[tuple[int, int], ...]

    def to_graph(self) -> Graph:
        rows: list[list[int]] = [[(v - 1) % self.k, (v + 1) % self.k] for v in range(self.k)]
        for i, j in self.diagonals:
            rows[i].append(j)
            rows[j].append(i)
        return Graph(self.k, tuple(tuple(sorted(r)) for r in rows))

    def apex_graph(self) -> Graph:
        """Vertex 0 joined to every polygon corner; corner ``i`` becomes ``i + 1``."""
        k = self.k
        rows: list[list[int]] = [[0, (v - 1) % k + 1, (v + 1) % k + 1] for v in range(k)]
        for i, j in self.diagonals:
            rows[i].append(j + 1)
            rows[j].append(i + 1)
        adj = (tuple(range(1, k + 1)),) + tuple(tuple(sorted(r)) for r in rows)
        return Graph(k + 1, adj)

    def dihedral_key(self) -> tuple[tuple[int, int], ...]:
        """Smallest diagonal set over the rotations and reflections of the polygon."""
        k = self.k
        best = None
        for r in range(k):
            for sign in (1, -1):
                cand = tuple(
                    sorted(
                        (min(a, b), max(a, b))
                        for a, b in (((sign * i + r) % k, (sign * j + r) % k) for i, j in self.diagonals)
                    )
                )
                if best is None or cand < best:
                    best = cand
        return best or ()


def _triangulate(poly: tuple[int, ...], start: int) -> Iterator[list[tuple[int, int]]]:
    """Diagonal lists of ``poly``, skipping the first ``start`` in canonical order.

    Splits on the triangle over the boundary edge ``(poly[0], poly[1])``.
    """
    size = len(poly)
    if size <= 3:
        if start == 0:
            yield []
        return
    for t in range(2, size):
        left = poly[1 : t + 1]
        right = poly[t:] + poly[:1]
        n_left, n_right = catalan(len(left) - 2), catalan(len(right) - 2)
        block = n_left * n_right
        if start >= block:
            start -= block
            continue
        own = []
        if t > 2:
            own.append(ordered_edge(poly[1], poly[t]))
        if t < size - 1:
            own.append(ordered_edge(poly[t], poly[0]))
        l0, r0 = divmod(start, n_right)
        start = 0
        for i, ld in enumerate(_triangulate(left, l0)):
            for rd in _triangulate(right, r0 if i == 0 else 0):
                yield own + ld + rd


def enumerate_triangulations(k: int, start: int = 0, stop: int | None = None) -> Iterator[TriangulationCode]:
    """Every labelled triangulation of the convex ``k``-gon, in a fixed order.

    ``start``/``stop`` select an index range of that order so the stream
    can be sharded without generating the skipped prefix.
    """
    if not 3 <= k <= MAX_POLYGON:
        raise CapabilityError(f"enumerate_triangulations supports 3 <= k <= {MAX_POLYGON}, got {k}")
    total = catalan(k - 2)
    stop = total if stop is None else min(stop, total)
    count = stop - start
    if count <= 0:
        return
    poly = tuple(range(k))
    for idx, diags in enumerate(_triangulate(poly, start)):
        if idx >= count:
            return
        yield TriangulationCode(k, tuple(sorted(diags)))


def _check_family_order(n: int, cap: int = MAX_FAMILY_ORDER) -> None:
    if not 4 <= n <= cap:
        raise CapabilityError(f"order must satisfy 4 <= n <= {cap}, got {n}")


def dominating_family(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Apex joins over all labelled triangulations of the ``(n-1)``-gon.

    Vertex 0 is the dominating apex.
    """
    _check_family_order(n)
    for t in enumerate_triangulations(n - 1, start, stop):
        yield t.apex_graph()


def family_size(n: int) -> int:
    _check_family_order(n)
    return catalan(n - 3)


# ---------------------------------------------------------------------------
# deduplication and argmax
# ---------------------------------------------------------------------------


def _dihedral_shard(args: tuple[int, int, int]) -> dict[tuple, tuple]:
    k, start, stop = args
    out: dict[tuple, tuple] = {}
    for t in enumerate_triangulations(k, start, stop):
        out.setdefault(t.dihedral_key(), t.diagonals)
    return out


def _shards(total: int, workers: int) -> list[tuple[int, int]]:
    parts = max(1, workers * 4) if workers > 1 else 1
    step = -(-total // parts)
    return [(i, min(i + step, total)) for i in range(0, total, step)]


def _map(fn, items: Sequence, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


@dataclass
class FamilyClasses:
    n: int
    labeled_count: int
    keys: list[str]
    representatives: list[Graph]


def _canon_of(args: tuple[int, tuple]) -> tuple[str, Graph]:
    k, diagonals = args
    g = TriangulationCode(k, diagonals).apex_graph()
    cg = canonical_graph(g)
    return graph6_encode(cg), cg


def family_classes(n: int, workers: int = 1, cap: int = MAX_SEARCH_ORDER) -> FamilyClasses:
    """Isomorphism classes of the dominating family, sorted by canonical key.

    Polygon symmetries are factored out first (cheap), then the remaining
    candidates are merged by full canonical form.
    """
    _check_family_order(n, cap)
    k = n - 1
    total = catalan(k - 2)
    merged: dict[tuple, tuple] = {}
    for part in _map(_dihedral_shard, [(k, a, b) for a, b in _shards(total, workers)], workers):
        for key, diags in part.items():
            merged.setdefault(key, diags)
    canon = _map(_canon_of, [(k, merged[key]) for key in sorted(merged)], workers)
    classes: dict[str, Graph] = {}
    for key, cg in canon:
        classes.setdefault(key, cg)
    keys = sorted(classes)
    log.info("n=%d: %d labelled, %d dihedral, %d iso classes", n, total, len(merged), len(keys))
    return FamilyClasses(n, total, keys, [classes[key] for key in keys])


@dataclass(frozen=True)
class EigenvectorCheck:
    name: str
    applicable: bool
    passed: bool
    value: float
    threshold: float
    margin: float


@dataclass
class EigenvectorReport:
    n: int
    entries_sorted: list[float] = field(repr=False)
    checks: list[EigenvectorCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if c.applicable)


def eigenvector_invariant_report(g: Graph, tol: float = DEFAULT_TOL, x: np.ndarray | None = None) -> EigenvectorReport:
    """Check the normalized Perron vector against properties of the extremal graph.

    (a) the largest entry sits at a dominating vertex and equals 1;
    (b) the second-largest entry exceeds 1/4 (asserted for n >= 10);
    (c) every entry after the top two is below half the second (n >= 48).
    """
    dom = g.dominating_vertices()
    if not dom:
        raise PreconditionError("graph has no dominating vertex")
    if x is None:
        x = normalized_eigenvector(g, tol)
    order = sorted(range(g.n), key=lambda v: -x[v])
    xs = [float(x[v]) for v in order]
    top_dom = max(float(x[v]) for v in dom)
    a_err = abs(top_dom - 1.0)
    checks = [
        EigenvectorCheck("max_entry_at_dominating", True, a_err <= 1e-10 and top_dom >= xs[0], top_dom, 1.0, 1e-10 - a_err)
    ]
    second = xs[1] if g.n > 1 else 0.0
    checks.append(
        EigenvectorCheck("second_entry_gt_quarter", g.n >= 10, second > 0.25, second, 0.25, second - 0.25)
    )
    rest = max(xs[2:], default=0.0)
    checks.append(
        EigenvectorCheck("rest_lt_half_second", g.n >= 48, rest < second / 2, rest, second / 2, second / 2 - rest)
    )
    return EigenvectorReport(g.n, xs, checks)


def dominating_degree_check(g: Graph) -> bool:
    """True when at least two vertices are dominating."""
    return len(g.dominating_vertices()) >= 2


@dataclass
class RewireResult:
    graph: Graph
    delta: float
    quadratic_delta: float
    certified_increase: bool


def rewiring_delta(
    g: Graph, w: int, a: int, b: int, target: int, x: np.ndarray | None = None, tol: float = DEFAULT_TOL
) -> RewireResult:
    """Move ``w`` off the edges ``wa``, ``wb`` and onto ``w target``.

    ``delta = x_w (x_target - x_a - x_b)`` for the normalized Perron vector
    ``x`` of ``g``; the quadratic form changes by ``2 * delta``.  When the
    Rayleigh quotient of the new graph at ``x`` beats ``rho_hi(g)`` the
    increase of the spectral radius is certified.
    """
    if len({w, a, b, target}) != 4:
        raise EdgeStateError("w, a, b and target must be distinct")
    if not (g.has_edge(w, a) and g.has_edge(w, b)):
        raise EdgeStateError(f"edges ({w}, {a}) and ({w}, {b}) must be present")
    if g.has_edge(w, target):
        raise EdgeStateError(f"edge ({w}, {target}) already present")
    res = spectral_radius(g, tol)
    if x is None:
        x = res.vector
    h = add_edge(remove_edge(remove_edge(g, w, a), w, b), w, target)
    delta = float(x[w] * (x[target] - x[a] - x[b]))
    qd = quadratic_form(h, x) - quadratic_form(g, x)
    norm2 = float(np.dot(x, x))
    # x^T A x >= rho_lo * |x|^2 since (Ax)_v >= rho_lo x_v componentwise
    certified = res.rho_lo + qd / norm2 > res.rho_hi
    return RewireResult(h, delta, qd, certified)


def ear_rewirings(g: Graph, apex: int, x: np.ndarray) -> list[tuple[int, int, int, int]]:
    """Degree-2 ears of ``G - apex`` that can be moved onto the second-heaviest vertex.

    Returns ``(w, a, b, target)`` tuples: ``w`` has exactly the two
    neighbours ``a, b`` besides the apex, and ``target`` is the vertex
    with the largest Perron entry other than the apex.
    """
    others = [v for v in range(g.n) if v != apex]
    target = max(others, key=lambda v: x[v])
    out = []
    for w in others:
        if w == target or g.has_edge(w, target):
            continue
        nb = [u for u in g.adj[w] if u != apex]
        if len(nb) == 2 and target not in nb:
            out.append((w, nb[0], nb[1], target))
    return out


@dataclass
class ExtremalReport:
    n: int
    family_size: int
    iso_classes: int
    argmax_graph6: str
    rho_lo: float
    rho_hi: float
    runner_up_graph6: str | None
    runner_up_gap: float | None
    is_fan_apex: bool
    two_dominating: bool
    ties: list[str]
    eigenvector_checks: list[dict]
    final_tol: float

    def to_dict(self) -> dict:
        return asdict(self)


def rank_classes(
    graphs: Sequence[Graph], tol: float = DEFAULT_TOL
) -> tuple[int, list[SpectralResult], list[int], float]:
    """Certified argmax over ``graphs``.

    Returns ``(winner, results, ties, final_tol)``.  Overlapping leaders
    are tightened by factors of ten down to ``TOL_FLOOR``; whatever still
    overlaps the winner is listed in ``ties``.
    """
    results = [spectral_radius(g, tol) for g in graphs]
    cur = tol
    while True:
        winner = max(range(len(graphs)), key=lambda i: (results[i].rho_lo, -i))
        lo = results[winner].rho_lo
        ties = [i for i, r in enumerate(results) if i != winner and r.rho_hi >= lo]
        if not ties or cur <= TOL_FLOOR:
            return winner, results, ties, cur
        cur = max(cur / 10.0, TOL_FLOOR)
        for i in [winner] + ties:
            results[i] = spectral_radius(graphs[i], cur)


def find_extremal(n: int, tol: float = DEFAULT_TOL, workers: int = 1) -> ExtremalReport:
    """Spectral argmax over the dominating family at order ``n``."""
    report, _ = search_classes(family_classes(n, workers), tol)
    return report


def search_classes(fam: FamilyClasses, tol: float = DEFAULT_TOL) -> tuple[ExtremalReport, list[SpectralResult]]:
    reps = fam.representatives
    winner, results, ties, final_tol = rank_classes(reps, tol)
    best = results[winner]
    others = [i for i in range(len(reps)) if i != winner]
    if others:
        runner = max(others, key=lambda i: results[i].rho_hi)
        gap = best.rho_lo - results[runner].rho_hi
        runner_key = fam.keys[runner]
    else:
        runner_key, gap = None, None
    g = reps[winner]
    ev = eigenvector_invariant_report(g, x=best.vector)
    report = ExtremalReport(
        n=fam.n,
        family_size=fam.labeled_count,
        iso_classes=len(reps),
        argmax_graph6=fam.keys[winner],
        rho_lo=best.rho_lo,
        rho_hi=best.rho_hi,
        runner_up_graph6=runner_key,
        runner_up_gap=gap,
        is_fan_apex=fam.keys[winner] == canonical_form(fan_apex(fam.n)),
        two_dominating=dominating_degree_check(g),
        ties=[fam.keys[i] for i in ties],
        eigenvector_checks=[asdict(c) for c in ev.checks],
        final_tol=final_tol,
    )
    return report, results
