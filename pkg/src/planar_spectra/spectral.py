"""Certified spectral radius of connected graphs.

The Perron root is enclosed by Collatz-Wielandt quotients: for any
positive vector ``x`` the values ``(Ax)_v / x_v`` bracket ``rho(A)`` from
both sides.  Power iteration only supplies a good ``x``; the enclosure is
valid whether or not it has converged.

Quadratic forms follow one convention throughout the package::

    X^T A X = 2 * sum over edges uv of x_u * x_v
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidOrderError, PreconditionError
from .graph import Graph
from .graph6 import graph6_encode

DEFAULT_TOL = 1e-10
MAX_ITER = 10**6
TOL_FLOOR = 1e-14
EPS = np.finfo(np.float64).eps


@dataclass
class SpectralResult:
    rho_lo: float
    rho_hi: float
    vector: np.ndarray = field(repr=False)
    iterations: int
    residual: float
    converged: bool = True

    @property
    def rho(self) -> float:
        return 0.5 * (self.rho_lo + self.rho_hi)

    @property
    def width(self) -> float:
        return self.rho_hi - self.rho_lo

    def contains(self, value: float) -> bool:
        return self.rho_lo <= value <= self.rho_hi

    def csv_row(self, g: Graph) -> list[str]:
        return [
            graph6_encode(g),
            str(g.n),
            str(g.m),
            repr(self.rho_lo),
            repr(self.rho_hi),
            str(self.iterations),
            repr(self.residual),
        ]


CSV_HEADER = ["graph6", "n", "m", "rho_lo", "rho_hi", "iterations", "residual"]


class _Adjacency:
    """CSR arrays for repeated sparse products ``A @ x``."""

    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.degree = np.array(g.degrees(), dtype=np.float64)
        self.indptr = np.zeros(g.n + 1, dtype=np.int64)
        self.indptr[1:] = np.cumsum(g.degrees())
        self.indices = np.fromiter(
            (u for nbrs in g.adj for u in nbrs), dtype=np.int64, count=2 * g.m
        )
        self.empty_rows = bool(np.any(self.degree == 0))

    def __matmul__(self, x: np.ndarray) -> np.ndarray:
        if self.empty_rows:
            out = np.zeros(self.n)
            for v in range(self.n):
                lo, hi = self.indptr[v], self.indptr[v + 1]
                if hi > lo:
                    out[v] = x[self.indices[lo:hi]].sum()
            return out
        return np.add.reduceat(x[self.indices], self.indptr[:-1])


def _require_connected(g: Graph) -> None:
    if g.n < 1:
        raise PreconditionError("spectral routines need n >= 1")
    if not g.is_connected():
        raise PreconditionError("graph is disconnected; split it into components first")


def _enclosure(a: _Adjacency, x: np.ndarray) -> tuple[float, float]:
    q = (a @ x) / x
    # each (Ax)_v sums deg(v) positive terms, then one division
    slack = (a.degree + 4.0) * EPS * np.abs(q)
    return float(np.min(q - slack)), float(np.max(q + slack))


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectralResult:
    """Enclose ``rho(G)`` in an interval of width at most ``tol``.

    Starts from the all-ones vector.  Bipartite graphs are iterated with
    ``A + I`` so the dominant eigenvalue is simple in modulus.  If the
    cap is reached the best enclosure so far is returned with
    ``converged=False``.
    """
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    _require_connected(g)
    if g.n == 1:
        return SpectralResult(0.0, 0.0, np.ones(1), 0, 0.0)
    a = _Adjacency(g)
    shift = 1.0 if g.is_bipartite() else 0.0
    x = np.ones(g.n)
    lo, hi = _enclosure(a, x)
    best = (lo, hi, x)
    it = 0
    while hi - lo > tol and it < max_iter:
        y = a @ x
        if shift:
            y += x
        x = y / y.max()
        it += 1
        lo, hi = _enclosure(a, x)
        if hi - lo < best[1] - best[0]:
            best = (lo, hi, x)
    lo, hi, x = best
    mid = 0.5 * (lo + hi)
    residual = float(np.max(np.abs(a @ x - mid * x)))
    return SpectralResult(lo, hi, x, it, residual, converged=hi - lo <= tol)


def normalized_eigenvector(g: Graph, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Perron vector scaled so that its largest entry is exactly 1."""
    return spectral_radius(g, tol).vector


def principal_eigenvector(g: Graph, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Perron vector scaled to unit Euclidean norm."""
    x = normalized_eigenvector(g, tol)
    return x / np.linalg.norm(x)


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise PreconditionError(f"vector has shape {x.shape}, expected ({g.n},)")
    return 2.0 * math.fsum(x[u] * x[v] for u, v in g.edges())


def rayleigh_quotient(g: Graph, x: Sequence[float]) -> float:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise PreconditionError(f"vector has shape {x.shape}, expected ({g.n},)")
    denom = float(np.dot(x, x))
    if denom == 0.0:
        raise PreconditionError("Rayleigh quotient of the zero vector")
    return quadratic_form(g, x) / denom


def separate(g: Graph, h: Graph, tol: float = DEFAULT_TOL) -> tuple[int, SpectralResult, SpectralResult]:
    """Order ``rho(g)`` against ``rho(h)`` by tightening both enclosures.

    Returns ``(sign, rg, rh)`` where sign is +1 if ``rho(g) > rho(h)`` is
    certified, -1 for the reverse, and 0 if the enclosures still overlap
    at ``TOL_FLOOR`` (gap below resolution).
    """
    while True:
        rg, rh = spectral_radius(g, tol), spectral_radius(h, tol)
        if rg.rho_lo > rh.rho_hi:
            return 1, rg, rh
        if rh.rho_lo > rg.rho_hi:
            return -1, rg, rh
        if tol <= TOL_FLOOR:
            return 0, rg, rh
        tol = max(tol / 10.0, TOL_FLOOR)


# ---------------------------------------------------------------------------
# polynomial certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyCertificate:
    """Claim ``f(A) Y <= r Y`` (or ``>=``) componentwise.

    ``coefficients[k]`` multiplies ``x**k``.
    """

    coefficients: tuple[float, ...]
    test_vector: tuple[float, ...]
    bound: float
    direction: str = "<="

    def __post_init__(self) -> None:
        if self.direction not in ("<=", ">="):
            raise PreconditionError(f"direction must be '<=' or '>=', got {self.direction!r}")
        if not self.coefficients:
            raise PreconditionError("empty polynomial")
        y = self.test_vector
        if any(v < 0 for v in y) or not any(v > 0 for v in y):
            raise PreconditionError("test vector must be nonnegative and nonzero")


@dataclass(frozen=True)
class CertificateCheck:
    holds: bool
    strict_component: bool
    equality_everywhere: bool


def poly_apply(g: Graph, coefficients: Sequence[float], y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return ``f(A) y`` by Horner's rule, plus ``|f|(A) y`` for error bounds."""
    a = _Adjacency(g)
    coeffs = list(coefficients)
    z = coeffs[-1] * y
    za = abs(coeffs[-1]) * y
    for c in reversed(coeffs[:-1]):
        z = a @ z + c * y
        za = a @ za + abs(c) * y
    return z, za


def check_poly_certificate(g: Graph, cert: PolyCertificate, tol: float = 0.0) -> CertificateCheck:
    """Evaluate ``cert`` on ``g``.

    Component ``v`` counts as equal when ``|(f(A)Y)_v - rY_v|`` is within
    rounding slack plus ``tol * Y_v``; with ``tol=0`` every verdict is a
    rigorous floating-point statement.
    """
    y = np.asarray(cert.test_vector, dtype=np.float64)
    if y.shape != (g.n,):
        raise PreconditionError(f"test vector has length {y.size}, graph has n={g.n}")
    fy, fy_abs = poly_apply(g, cert.coefficients, y)
    ry = cert.bound * y
    deg = len(cert.coefficients)
    maxdeg = max(g.degrees(), default=0)
    slack = 4.0 * deg * (maxdeg + 2) * EPS * (fy_abs + np.abs(ry)) + tol * y
    diff = fy - ry if cert.direction == "<=" else ry - fy
    holds = bool(np.all(diff <= slack))
    strict = holds and bool(np.any(diff < -slack))
    equal = holds and bool(np.all(np.abs(diff) <= slack))
    return CertificateCheck(holds, strict, equal)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def quotient_rho_phi(n: int) -> float:
    """Perron root of ``phi(n)``: larger root of ``t^2 - 3t - 2n + 6``."""
    if n < 5:
        raise InvalidOrderError(f"quotient_rho_phi needs n >= 5, got {n}")
    return 1.5 + math.sqrt(2 * n - 3.75)


def h_lower_bound(n: int) -> float:
    """Rayleigh lower bound for ``rho(cal_h(n))`` from the Perron vector of ``phi(n)``.

    Deleting one cycle edge from ``phi(n)`` lowers the quadratic form of
    its principal eigenvector by ``2 y_3^2``, where
    ``y_3^2 = 1 / (2n - 15/4 - sqrt(2n - 15/4) / 2)``.
    """
    if n < 5:
        raise InvalidOrderError(f"h_lower_bound needs n >= 5, got {n}")
    s = math.sqrt(2 * n - 3.75)
    return 1.5 + s - 2.0 / (2 * n - 3.75 - s / 2)


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> np.ndarray:
    """Quotient matrix of an equitable partition; raises if not equitable."""
    cls = {}
    for i, cell in enumerate(partition):
        for v in cell:
            cls[v] = i
    if sorted(cls) != list(range(g.n)):
        raise PreconditionError("partition must cover every vertex exactly once")
    k = len(partition)
    q = np.zeros((k, k))
    for i, cell in enumerate(partition):
        rows = set()
        for v in cell:
            counts = [0] * k
            for u in g.adj[v]:
                counts[cls[u]] += 1
            rows.add(tuple(counts))
        if len(rows) != 1:
            raise PreconditionError(f"partition cell {i} is not equitable")
        q[i] = rows.pop()
    return q


def quotient_spectral_radius(g: Graph, partition: Sequence[Sequence[int]]) -> float:
    """Largest eigenvalue of the equitable quotient (equals ``rho(G)`` when connected)."""
    return float(np.max(np.linalg.eigvals(quotient_matrix(g, partition)).real))
