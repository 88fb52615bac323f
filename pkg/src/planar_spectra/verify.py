"""Seeded verification suites driven by the ``verify`` command."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import charpoly
from .bounds import check_neighborhood_edge_bound, check_row_sum_inequality, planar_upper_bound
from .extremal import (
    ear_rewirings,
    eigenvector_invariant_report,
    find_extremal,
    rewiring_delta,
)
from .generators import perturbed_fan, random_connected_graph, random_planar_graph
from .graph import Graph, add_edge, fan_apex, remove_edge
from .graph6 import graph6_encode
from .spectral import (
    PolyCertificate,
    check_poly_certificate,
    separate,
    spectral_radius,
)

DEFAULT_SEED = 20240601
PERTURBATION = 1e-3


@dataclass
class Failure:
    graph6: str
    context: dict


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, g: Graph, **context) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(graph6_encode(g), context))


def upper_bound_certificate(g: Graph) -> PolyCertificate:
    """All-ones test vector for ``(A^2 - 4A - (2n - 10)) 1 <= 0``."""
    n = g.n
    return PolyCertificate((-(2.0 * n - 10.0), -4.0, 1.0), (1.0,) * n, 0.0, "<=")


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]


def non_bridges(g: Graph) -> list[tuple[int, int]]:
    return [e for e in g.edges() if remove_edge(g, *e).is_connected()]


def certificate_trial(g: Graph, rng: np.random.Generator) -> dict[str, bool]:
    """Perron equality case plus a one-entry perturbation checked against the oracle."""
    res = spectral_radius(g, 1e-12)
    x = res.vector
    out: dict[str, bool] = {}
    for direction in ("<=", ">="):
        cert = PolyCertificate((0.0, 1.0), tuple(x), res.rho, direction)
        out[f"equality_{direction}"] = check_poly_certificate(g, cert, tol=res.width).equality_everywhere
    out["self_upper"] = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(x), res.rho_hi, "<=")).holds
    out["self_lower"] = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(x), res.rho_lo, ">=")).holds

    lo, hi = charpoly.spectral_radius_bisection(g, res.rho_lo - 1.0, res.rho_hi + 1.0)
    out["oracle_in_enclosure"] = lo <= res.rho_hi and hi >= res.rho_lo

    y = x.copy()
    i = int(rng.integers(0, g.n))
    y[i] += PERTURBATION
    at_rho = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(y), res.rho, "<="), tol=res.width)
    out["perturbed_not_equal"] = (not at_rho.holds or at_rho.strict_component) and not at_rho.equality_everywhere
    # holding at the oracle's lower end would force rho <= lo by Perron-Frobenius
    at_lo = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(y), lo, "<="))
    out["perturbed_fails_below_oracle"] = not at_lo.holds

    ay = np.array([y[list(nb)].sum() for nb in g.adj])
    q = ay / y
    r_up, r_dn = float(q.max()), float(q.min())
    up = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(y), r_up, "<="))
    dn = check_poly_certificate(g, PolyCertificate((0.0, 1.0), tuple(y), r_dn, ">="))
    # the certificate verdicts must agree with the independent oracle
    out["strict_upper_matches_oracle"] = up.holds and up.strict_component and hi <= r_up
    out["strict_lower_matches_oracle"] = dn.holds and dn.strict_component and lo >= r_dn
    return out


def suite_certificates(orders: range, seed: int, trials: int = 100) -> SuiteResult:
    rng = np.random.default_rng(seed)
    result = SuiteResult("certificates")
    for t in range(trials):
        n = int(rng.integers(orders.start, orders.stop))
        g = random_connected_graph(n, float(rng.uniform(0.05, 0.6)), rng)
        for name, ok in certificate_trial(g, rng).items():
            result.record(ok, g, trial=t, check=name)
    return result


def suite_monotonicity(orders: range, seed: int, trials: int = 200) -> SuiteResult:
    rng = np.random.default_rng(seed)
    result = SuiteResult("monotonicity")
    done = 0
    while done < trials:
        n = int(rng.integers(max(orders.start, 3), orders.stop))
        g = random_connected_graph(n, float(rng.uniform(0.05, 0.5)), rng)
        missing, removable = non_edges(g), non_bridges(g)
        if not missing or not removable:
            continue
        u, v = missing[int(rng.integers(0, len(missing)))]
        sign, _, _ = separate(add_edge(g, u, v), g)
        result.record(sign == 1, g, trial=done, op="add", edge=[u, v])
        a, b = removable[int(rng.integers(0, len(removable)))]
        sign, _, _ = separate(g, remove_edge(g, a, b))
        result.record(sign == 1, g, trial=done, op="remove", edge=[a, b])
        done += 1
    return result


def suite_rowsum(orders: range, seed: int, trials: int = 100) -> SuiteResult:
    rng = np.random.default_rng(seed)
    result = SuiteResult("rowsum")
    for t in range(trials):
        n = int(rng.integers(max(orders.start, 7), orders.stop))
        g = random_planar_graph(n, rng)
        rows = check_row_sum_inequality(g)
        result.record(all(r.ok for r in rows), g, trial=t, check="row_sum")
        nbhd = check_neighborhood_edge_bound(g)
        result.record(all(r.ok for r in nbhd), g, trial=t, check="neighbourhood_edges")
        result.record(check_poly_certificate(g, upper_bound_certificate(g)).holds, g, trial=t, check="certificate")
        r = spectral_radius(g)
        result.record(r.rho_hi <= planar_upper_bound(n) + 1e-9, g, trial=t, check="upper_bound", rho_hi=r.rho_hi)
    return result


def suite_eigvec(orders: range, seed: int) -> SuiteResult:
    result = SuiteResult("eigvec")
    for n in orders:
        g = fan_apex(n)
        rep = eigenvector_invariant_report(g)
        for c in rep.checks:
            if c.applicable:
                result.record(c.passed, g, n=n, check=c.name, margin=c.margin)
        result.record(g.degree(0) == n - 1 and g.degree(1) == n - 1, g, n=n, check="two_dominating")
    return result


def suite_rewiring(orders: range, seed: int, per_order: int = 30) -> SuiteResult:
    """Ear moves on perturbed fans; applicable moves must certify an increase."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("rewiring")
    for n in orders:
        for _ in range(per_order):
            g = perturbed_fan(n - 1, int(rng.integers(1, 4)), rng).apex_graph()
            x = spectral_radius(g).vector
            for w, a, b, target in ear_rewirings(g, 0, x):
                rw = rewiring_delta(g, w, a, b, target, x=x)
                move = [w, a, b, target]
                result.record(abs(rw.quadratic_delta - 2 * rw.delta) <= 1e-12, g, n=n, move=move, check="identity")
                if x[target] > x[a] + x[b]:
                    ok = rw.delta > 0 and rw.certified_increase and separate(rw.graph, g)[0] == 1
                    result.record(ok, g, n=n, move=move, check="increase", delta=rw.delta)
    return result


def suite_extremal(orders: range, seed: int, workers: int = 1) -> SuiteResult:
    result = SuiteResult("extremal")
    for n in orders:
        rep = find_extremal(n, workers=workers)
        ok = rep.is_fan_apex and not rep.ties and rep.two_dominating and (
            rep.runner_up_gap is None or rep.runner_up_gap > 1e-6
        )
        result.record(ok, fan_apex(n), n=n, argmax=rep.argmax_graph6, gap=rep.runner_up_gap)
    return result


SUITES: dict[str, tuple[Callable[..., SuiteResult], range]] = {
    "certificates": (suite_certificates, range(4, 31)),
    "monotonicity": (suite_monotonicity, range(3, 31)),
    "rowsum": (suite_rowsum, range(7, 26)),
    "eigvec": (suite_eigvec, range(48, 61)),
    "rewiring": (suite_rewiring, range(16, 31)),
    "extremal": (suite_extremal, range(9, 13)),
}
