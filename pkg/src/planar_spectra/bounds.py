"""Closed-form bounds on the planar spectral radius and the per-vertex
inequalities used to prove them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PreconditionError
from .graph import Graph
from .planarity import is_planar
from .spectral import h_lower_bound

# (order threshold, additive constant), highest threshold first
TIER_TABLE: tuple[tuple[int, float], ...] = ((50, 1.478), (40, 1.472), (10, 1.359))
TIER_CONSTANTS = tuple(c for _, c in TIER_TABLE)


def _root_term(n: float) -> float:
    return math.sqrt(2 * n - 3.75)


def tier_constant(n: int) -> float:
    for threshold, c in TIER_TABLE:
        if n >= threshold:
            return c
    raise DomainError(f"no tier constant below n={TIER_TABLE[-1][0]}, got {n}")


def planar_upper_bound(n: int) -> float:
    """``2 + sqrt(2n - 6)``, valid for planar graphs on at least 7 vertices."""
    if n < 7:
        raise DomainError(f"planar_upper_bound needs n >= 7, got {n}")
    return 2.0 + math.sqrt(2 * n - 6)


def varrho_lower_bound(n: int) -> float:
    """Tiered lower bound ``c + sqrt(2n - 15/4)`` on the planar maximum."""
    if n < 10:
        raise DomainError(f"varrho_lower_bound needs n >= 10, got {n}")
    return tier_constant(n) + _root_term(n)


def tier_margin(n: int, c: float) -> float:
    """How far ``h_lower_bound(n) - sqrt(2n - 15/4)`` clears ``c``."""
    return h_lower_bound(n) - _root_term(n) - c


def x2_lower_bound(n: int, tier_constant: float) -> float:
    """Lower bound on the second-largest normalized Perron entry.

    From ``(rho^2 - n + 1) / (4n - 10) <= x_2`` with ``rho > c + s`` and
    ``s = sqrt(2n - 15/4)``, giving ``(c^2 + 2cs + n - 11/4) / (4n - 10)``.
    """
    if n < 10:
        raise DomainError(f"x2_lower_bound needs n >= 10, got {n}")
    if tier_constant not in TIER_CONSTANTS:
        raise DomainError(f"tier constant must be one of {TIER_CONSTANTS}, got {tier_constant}")
    c, s = tier_constant, _root_term(n)
    return (c * c + 2 * c * s + n - 2.75) / (4 * n - 10)


def x2_threshold_order(target: float, tier_constant: float, n_max: int = 10_000) -> int | None:
    """Largest ``n`` in ``[10, n_max]`` with ``x2_lower_bound(n, c) > target``.

    The bound is decreasing in ``n``; returns ``None`` if it never exceeds
    ``target``.
    """
    best = None
    for n in range(10, n_max + 1):
        if x2_lower_bound(n, tier_constant) > target:
            best = n
        else:
            break
    return best


@dataclass(frozen=True)
class BoundReport:
    n: int
    upper: float
    lower_tier: float
    lower: float
    x2_bound: float

    @property
    def consistent(self) -> bool:
        return self.lower < self.upper


def bound_report(n: int) -> BoundReport:
    c = tier_constant(n)
    return BoundReport(
        n=n,
        upper=planar_upper_bound(n),
        lower_tier=c,
        lower=varrho_lower_bound(n),
        x2_bound=x2_lower_bound(n, c),
    )


@dataclass(frozen=True)
class VertexMargin:
    vertex: int
    value: int
    limit: int

    @property
    def margin(self) -> int:
        return self.limit - self.value

    @property
    def ok(self) -> bool:
        return self.value <= self.limit


def _require_planar(g: Graph) -> None:
    if not is_planar(g):
        raise PreconditionError("input graph is not planar")


def check_row_sum_inequality(g: Graph) -> list[VertexMargin]:
    """Per vertex: ``sum of neighbour degrees <= 2n + 4 d_v - 10``.

    The left side is the row sum of ``A^2`` at ``v``.
    """
    if g.n < 7:
        raise PreconditionError(f"row-sum inequality needs n >= 7, got {g.n}")
    _require_planar(g)
    deg = g.degrees()
    return [
        VertexMargin(v, sum(deg[u] for u in g.adj[v]), 2 * g.n + 4 * deg[v] - 10)
        for v in range(g.n)
    ]


def check_neighborhood_edge_bound(g: Graph) -> list[VertexMargin]:
    """Per vertex of degree >= 2: ``e(N(v)) <= 2 d_v - 3``."""
    _require_planar(g)
    out = []
    for v in range(g.n):
        nbrs = g.adj[v]
        if len(nbrs) < 2:
            continue
        inside = set(nbrs)
        e = sum(1 for u in nbrs for w in g.adj[u] if w in inside) // 2
        out.append(VertexMargin(v, e, 2 * len(nbrs) - 3))
    return out
