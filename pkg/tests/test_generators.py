from __future__ import annotations

import numpy as np

from planar_spectra.extremal import catalan, enumerate_triangulations
from planar_spectra.generators import (
    perturbed_fan,
    random_connected_graph,
    random_maximal_planar,
    random_planar_graph,
    random_triangulation,
)
from planar_spectra.planarity import is_maximal_outerplanar, is_maximal_planar, is_planar


def test_connected_graphs(rng):
    for _ in range(50):
        g = random_connected_graph(int(rng.integers(1, 30)), float(rng.uniform(0, 0.5)), rng)
        assert g.is_connected()


def test_maximal_planar(rng):
    for n in (4, 5, 9, 30):
        g = random_maximal_planar(n, rng)
        assert is_maximal_planar(g)


def test_planar_graphs(rng):
    for _ in range(30):
        g = random_planar_graph(int(rng.integers(7, 31)), rng)
        assert g.is_connected() and is_planar(g)


def test_triangulations_are_valid(rng):
    for _ in range(50):
        k = int(rng.integers(3, 15))
        t = random_triangulation(k, rng)
        assert len(t.diagonals) == k - 3
        assert is_maximal_outerplanar(t.to_graph())
        t = perturbed_fan(k, int(rng.integers(0, 5)), rng)
        assert len(t.diagonals) == k - 3
        assert is_maximal_outerplanar(t.to_graph())


def test_random_triangulation_reaches_every_code():
    rng = np.random.default_rng(3)
    seen = {random_triangulation(7, rng).diagonals for _ in range(600)}
    assert len(seen) == catalan(5)
    assert seen == {t.diagonals for t in enumerate_triangulations(7)}


def test_seeded_determinism():
    a = random_planar_graph(20, np.random.default_rng(7))
    b = random_planar_graph(20, np.random.default_rng(7))
    assert a == b
