from __future__ import annotations

import numpy as np
import pytest

from planar_spectra.errors import EdgeStateError, InvalidOrderError, PreconditionError
from planar_spectra.generators import random_connected_graph
from planar_spectra.graph import (
    Graph,
    add_edge,
    cal_h,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    fan_apex,
    join,
    path_graph,
    phi,
    remove_edge,
)
from planar_spectra.isomorphism import is_isomorphic


def test_path_examples():
    assert (path_graph(1).n, path_graph(1).m) == (1, 0)
    assert list(path_graph(2).edges()) == [(0, 1)]
    p5 = path_graph(5)
    assert p5.m == 4 and p5.degrees() == [1, 2, 2, 2, 1]
    with pytest.raises(InvalidOrderError):
        path_graph(0)


def test_cycle_examples():
    assert cycle_graph(3).m == 3
    c4 = cycle_graph(4)
    assert c4.m == 4 and c4.is_bipartite()
    assert not cycle_graph(5).is_bipartite()
    for k in (0, 1, 2):
        with pytest.raises(InvalidOrderError):
            cycle_graph(k)


def test_complete_examples():
    assert complete_graph(5).m == 10
    assert complete_bipartite(3, 3).m == 9
    star = complete_bipartite(1, 4)
    assert star.m == 4 and star.degrees() == [4, 1, 1, 1, 1]
    with pytest.raises(InvalidOrderError):
        complete_bipartite(0, 3)


def test_join_examples():
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)
    assert join(path_graph(2), cycle_graph(3)) == complete_graph(5)


def test_join_edge_count_random(rng):
    for _ in range(100):
        g = random_connected_graph(int(rng.integers(1, 9)), 0.4, rng)
        h = random_connected_graph(int(rng.integers(1, 9)), 0.4, rng)
        j = join(g, h)
        assert j.m == g.m + h.m + g.n * h.n
        assert j.n == g.n + h.n


def test_named_constructions():
    assert phi(5) == complete_graph(5)
    assert phi(6).m == 13
    k5e = remove_edge(complete_graph(5), 2, 4)
    assert cal_h(5) == k5e
    assert cal_h(20).m == 54
    assert fan_apex(4) == complete_graph(4)
    assert is_isomorphic(fan_apex(5), k5e)
    for f, least in ((phi, 5), (cal_h, 5), (fan_apex, 4)):
        with pytest.raises(InvalidOrderError):
            f(least - 1)


@pytest.mark.parametrize("n", range(5, 21))
def test_cal_h_is_fan_apex(n):
    h = cal_h(n)
    assert h.m == 3 * n - 6
    assert is_isomorphic(h, fan_apex(n))
    expected = [0, 1, 3] if n == 5 else [0, 1]
    assert h.dominating_vertices() == expected


def test_edge_edits():
    assert add_edge(path_graph(3), 0, 2) == cycle_graph(3)
    assert remove_edge(cycle_graph(3), 0, 1) == Graph.from_edges(3, [(0, 2), (1, 2)])
    g = cycle_graph(6)
    assert remove_edge(add_edge(g, 0, 3), 0, 3) == g
    with pytest.raises(EdgeStateError):
        add_edge(g, 2, 2)
    with pytest.raises(EdgeStateError):
        add_edge(g, 0, 1)
    with pytest.raises(EdgeStateError):
        remove_edge(g, 0, 2)


def test_validation_rejects_bad_adjacency():
    with pytest.raises(PreconditionError):
        Graph(2, ((1,), ()))
    with pytest.raises(PreconditionError):
        Graph(2, ((0,), ()))
    with pytest.raises(PreconditionError):
        Graph(3, ((2, 1), (0,), (0,)))
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(PreconditionError):
        Graph.from_edges(3, [(0, 3)])


def test_constructors_keep_invariants(rng):
    graphs = [empty_graph(4), path_graph(7), cycle_graph(9), complete_graph(6), complete_bipartite(2, 5),
              phi(11), cal_h(11), fan_apex(11), disjoint_union(cycle_graph(3), path_graph(4))]
    graphs += [random_connected_graph(12, 0.3, rng) for _ in range(20)]
    for g in graphs:
        for v, row in enumerate(g.adj):
            assert list(row) == sorted(set(row))
            assert all(v in g.adj[u] for u in row)
        assert sum(g.degrees()) == 2 * g.m
        assert np.array_equal(g.adjacency_matrix(), g.adjacency_matrix().T)


def test_components_and_relabel():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    assert g.components() == [[0, 1, 2], [3, 4]]
    assert not g.is_connected()
    assert not empty_graph(0).is_connected()
    p = path_graph(3).relabel([1, 0, 2])
    assert sorted(p.edges()) == [(0, 1), (0, 2)]
    with pytest.raises(PreconditionError):
        path_graph(3).relabel([0, 0, 1])


def test_induced_and_delete():
    g = fan_apex(7)
    rest = g.delete_vertices([0])
    assert rest.n == 6 and rest.m == g.m - 6
    sub = g.induced_subgraph([2, 3, 4])
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]
