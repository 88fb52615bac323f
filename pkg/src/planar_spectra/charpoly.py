"""Exact characteristic polynomials and a bisection oracle for rho(G).

Independent of the power-iteration path in :mod:`spectral`: integer
Faddeev-LeVerrier for the coefficients, then bisection on dyadic points
with an exact sign test.  For a real-rooted monic ``p`` with largest root
``rho``, ``x > rho`` holds exactly when every derivative of ``p`` is
positive at ``x`` (Budan-Fourier), so no bracketing of other roots is
needed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .graph import Graph


def characteristic_polynomial(g: Graph) -> list[int]:
    """Integer coefficients of ``det(xI - A)``, ``coeffs[k]`` for ``x**k``."""
    n = g.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = []
        for v in range(n):
            row = [0] * n
            for u in g.adj[v]:
                mu = m[u]
                for j in range(n):
                    row[j] += mu[j]
            am.append(row)
        c_prev = coeffs[n - k + 1]
        for v in range(n):
            am[v][v] += c_prev
        m = am
        trace = sum(m[u][v] for v in range(n) for u in g.adj[v])
        assert trace % k == 0
        coeffs[n - k] = -trace // k
    return coeffs


def _shift_signs_positive(coeffs: list[int], num: int, k: int) -> bool:
    """True iff every Taylor coefficient of ``p`` at ``num / 2**k`` is > 0."""
    n = len(coeffs) - 1
    q = [c << (k * (n - i)) for i, c in enumerate(coeffs)]
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            q[j] += num * q[j + 1]
    return all(c > 0 for c in q)


def largest_root_bracket(
    coeffs: list[int], lo: float, hi: float, bits: int = 48
) -> tuple[Fraction, Fraction]:
    """Exact dyadic ``a <= rho < b`` for the largest root ``rho``, with ``b - a = 2**-bits``."""
    a = math.floor(Fraction(lo) * 2**bits)
    b = math.ceil(Fraction(hi) * 2**bits)
    if not _shift_signs_positive(coeffs, b, bits):
        raise ValueError(f"upper end {hi} is not above the largest root")
    if _shift_signs_positive(coeffs, a, bits):
        raise ValueError(f"lower end {lo} is already above the largest root")
    while b - a > 1:
        mid = (a + b) // 2
        if _shift_signs_positive(coeffs, mid, bits):
            b = mid
        else:
            a = mid
    return Fraction(a, 2**bits), Fraction(b, 2**bits)


def spectral_radius_bisection(g: Graph, lo: float, hi: float, bits: int = 48) -> tuple[float, float]:
    """Float interval guaranteed to contain ``rho(G)``."""
    a, b = largest_root_bracket(characteristic_polynomial(g), lo, hi, bits)
    return math.nextafter(float(a), -math.inf), math.nextafter(float(b), math.inf)
