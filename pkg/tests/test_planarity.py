from __future__ import annotations

import networkx as nx
import pytest

from planar_spectra.errors import InvalidOrderError, MalformedEmbeddingError, PreconditionError, StructureViolationError
from planar_spectra.generators import random_connected_graph, random_spanning_subgraph
from planar_spectra.graph import (
    Graph,
    cal_h,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    fan_apex,
    join,
    path_graph,
    phi,
    remove_edge,
)
from planar_spectra.planarity import (
    K5,
    K33,
    Embedding,
    KuratowskiWitness,
    check_euler,
    faces,
    is_maximal_outerplanar,
    is_maximal_planar,
    is_outerplanar,
    is_planar,
    neighbor_link_cycle,
    test_planarity as planarity_test,
    trace_faces,
    validate_kuratowski,
)

# vertex 0 is the top vertex of the drawing; K5 minus the edge {2, 4}
FIG_1_1 = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])


def _embedding(g: Graph) -> Embedding:
    res = planarity_test(g)
    assert isinstance(res, Embedding)
    return res


def test_k5_and_k33_witnesses():
    w = planarity_test(complete_graph(5))
    assert isinstance(w, KuratowskiWitness) and w.kind == K5
    assert len(w.paths) == 10
    w = planarity_test(complete_bipartite(3, 3))
    assert isinstance(w, KuratowskiWitness) and w.kind == K33
    assert len(w.paths) == 9


def test_small_embeddings():
    emb = _embedding(complete_graph(4))
    assert emb.face_count == 4
    assert all(len(f) == 3 for f in emb.faces)
    assert len(faces(_embedding(FIG_1_1))) == 6
    assert _embedding(cal_h(12)).face_count == 20


def test_cal_h_20_is_triangulated():
    emb = _embedding(cal_h(20))
    assert emb.face_count == 2 * 20 - 4
    assert all(len(f) == 3 for f in emb.faces)
    assert cal_h(20).m == 54


def test_faces_cover_every_edge_twice():
    g = join(complete_graph(1), path_graph(6))
    emb = _embedding(g)
    seen: dict[frozenset[int], int] = {}
    for f in emb.faces:
        for i in range(len(f)):
            key = frozenset((f[i], f[(i + 1) % len(f)]))
            seen[key] = seen.get(key, 0) + 1
    assert set(seen.values()) == {2}
    assert len(seen) == g.m


def test_tree_has_one_face():
    emb = _embedding(path_graph(5))
    assert emb.face_count == 1 and len(emb.faces[0]) == 8


def test_malformed_rotation():
    g = complete_graph(4)
    with pytest.raises(MalformedEmbeddingError):
        trace_faces(g, [(1, 2), (0, 2, 3), (0, 1, 3), (0, 1, 2)])
    # a valid permutation that is not planar: Euler check fails
    bad = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 2, 1)]
    circuits = trace_faces(g, bad)
    with pytest.raises(MalformedEmbeddingError):
        check_euler(Embedding(g, tuple(map(tuple, bad)), tuple(circuits), len(circuits)))


def test_random_subgraphs_of_cal_h(rng):
    base = cal_h(14)
    for _ in range(200):
        g = random_spanning_subgraph(base, float(rng.uniform(0, 1)), rng)
        emb = _embedding(g)
        assert g.n - g.m + emb.face_count == 2
        assert len(faces(emb)) == emb.face_count


def test_dense_graphs_give_valid_witnesses(rng):
    found = 0
    while found < 50:
        g = random_connected_graph(int(rng.integers(6, 13)), 0.6, rng)
        res = planarity_test(g)
        if g.m > 3 * g.n - 6:
            assert isinstance(res, KuratowskiWitness)
        if isinstance(res, KuratowskiWitness):
            validate_kuratowski(g, res)
            found += 1


def test_agrees_with_networkx(rng):
    for _ in range(100):
        g = random_connected_graph(int(rng.integers(4, 12)), float(rng.uniform(0.1, 0.6)), rng)
        h = nx.Graph(list(g.edges()))
        h.add_nodes_from(range(g.n))
        assert is_planar(g) == nx.check_planarity(h)[0]


def test_bogus_witness_rejected():
    g = complete_graph(5)
    w = planarity_test(g)
    assert isinstance(w, KuratowskiWitness)
    with pytest.raises(StructureViolationError):
        validate_kuratowski(g, KuratowskiWitness(K5, w.branch_vertices, w.paths[:-1]))
    with pytest.raises(StructureViolationError):
        validate_kuratowski(remove_edge(g, 0, 1), w)
    with pytest.raises(StructureViolationError):
        validate_kuratowski(g, KuratowskiWitness(K33, w.branch_vertices, w.paths))


def test_bipartite_planar_edge_bound(rng):
    # planar bipartite graphs have m <= 2n - 4
    for _ in range(100):
        g = random_spanning_subgraph(cal_h(12), float(rng.uniform(0, 1)), rng)
        if g.is_bipartite() and g.n >= 3:
            assert g.m <= 2 * g.n - 4
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(complete_bipartite(2, 7))


def test_maximal_planar_predicate():
    assert is_maximal_planar(cal_h(10))
    assert not is_maximal_planar(cycle_graph(6))
    assert not is_maximal_planar(phi(6))
    assert not is_planar(phi(6))
    with pytest.raises(InvalidOrderError):
        is_maximal_planar(path_graph(2))


def test_outerplanar_predicates():
    fan = join(complete_graph(1), path_graph(6))
    assert is_outerplanar(fan) and is_maximal_outerplanar(fan)
    assert not is_outerplanar(complete_graph(4))
    c5 = cycle_graph(5)
    assert is_outerplanar(c5) and not is_maximal_outerplanar(c5)
    assert not is_outerplanar(complete_bipartite(2, 3))


def test_neighbor_link_cycle():
    cyc = neighbor_link_cycle(cal_h(8), 0)
    assert sorted(cyc) == list(range(1, 8))
    g = cal_h(8)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % 7]) for i in range(7))
    for v in range(4):
        assert sorted(neighbor_link_cycle(complete_graph(4), v)) == [u for u in range(4) if u != v]
    wheel = join(complete_graph(1), cycle_graph(5))
    cyc = neighbor_link_cycle(wheel, 0)
    assert nx.is_isomorphic(nx.cycle_graph(5), nx.Graph([(cyc[i], cyc[(i + 1) % 5]) for i in range(5)]))
    with pytest.raises(PreconditionError):
        neighbor_link_cycle(cycle_graph(5), 0)
    with pytest.raises(PreconditionError):
        neighbor_link_cycle(complete_graph(3), 0)
    with pytest.raises(PreconditionError):
        neighbor_link_cycle(complete_graph(5), 0)
    with pytest.raises(PreconditionError):
        neighbor_link_cycle(complete_bipartite(2, 3), 0)
