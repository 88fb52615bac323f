from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from planar_spectra.graph import Graph, join
from planar_spectra.graph6 import graph6_decode, graph6_encode
from planar_spectra.isomorphism import canonical_form


@st.composite
def graphs(draw, max_n: int = 12) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(graphs(max_n=40))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@settings(max_examples=60)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labels(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g, h):
    assert join(g, h).m == g.m + h.m + g.n * h.n
