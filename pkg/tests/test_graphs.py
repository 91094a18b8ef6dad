import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms import isomorphism

from raagcurves import graphs
from raagcurves.graphs import Graph, GraphError


def test_named_graph_sizes():
    g0, g1, g1ef = graphs.gamma0(), graphs.gamma1(), graphs.gamma1(ef=True)
    assert (len(g0), g0.number_of_edges()) == (7, 14)
    assert (len(g1), g1.number_of_edges()) == (8, 20)
    assert g1ef.number_of_edges() == 21 and g1ef.has_edge("e", "f")
    assert graphs.lambda_graph(6).number_of_edges() == 14 + 1 + 2 * 7


def test_catalog_names():
    assert graphs.catalog("K5") == graphs.catalog("K(5)")
    assert graphs.catalog("gamma1_ef") == graphs.gamma1(True)
    with pytest.raises(GraphError):
        graphs.catalog("petersen")


def test_graph_rejects_loops_and_unknown_vertices():
    with pytest.raises(GraphError):
        Graph(["a"], [("a", "a")])
    with pytest.raises(GraphError):
        Graph(["a"], [("a", "b")])


def test_json_round_trip():
    g = graphs.gamma1(True)
    assert Graph.from_json(g.to_json()) == g
    assert '"a" -- "b"' in g.to_dot()


def test_consistency_suite_both_variants():
    for ef in (False, True):
        report = graphs.consistency_suite(graphs.gamma0(), graphs.gamma1(ef))
        assert report.passed and report.count() == 5


def test_consistency_suite_detects_a_broken_edge_list():
    g1 = graphs.gamma1()
    broken = Graph(g1.vertices, [e for e in g1.edges if e != ("a", "g")])
    assert not graphs.consistency_suite(graphs.gamma0(), broken).passed


def test_clique_numbers():
    assert graphs.clique_number(graphs.gamma0()) == 3
    assert graphs.clique_number(graphs.gamma1()) == 4  # {a, b, e, g}
    assert graphs.clique_number(graphs.complete_graph(5)) == 5
    assert graphs.clique_number(graphs.lambda_graph(8)) == 7


def test_embed_examples():
    assert graphs.find_induced(graphs.cycle4(), graphs.gamma0()) is not None
    assert graphs.find_induced(graphs.complete_graph(5), graphs.gamma0()) is None
    # Gamma0 sits inside Gamma1 only after collapsing e, f; not as an induced subgraph
    assert graphs.find_induced(graphs.cycle4(), graphs.gamma1()) is not None


def test_thick_stars():
    assert graphs.has_thick_stars(graphs.complete_graph(5), 3)
    assert not graphs.has_thick_stars(graphs.complete_graph(4), 3)
    assert graphs.has_thick_stars(graphs.path_graph(3), 1)


def test_eta_lower_bound_lambda():
    facts = graphs.EtaFacts()
    facts.register(graphs.gamma0(), 5)
    for n in range(4, 9):
        assert graphs.eta_lower_bound(graphs.lambda_graph(n), facts) == n + 1
    # without the fact only the clique bound is available
    assert graphs.eta_lower_bound(graphs.lambda_graph(6)) == 5


def test_eta_fact_below_clique_number_rejected():
    with pytest.raises(ValueError):
        graphs.EtaFacts().register(graphs.complete_graph(4), 3)


def test_join_and_anti_connectivity():
    j = graphs.join(graphs.gamma0(), graphs.complete_graph(2))
    assert len(graphs.universal_vertices(j)) == 2
    assert graphs.is_anti_connected(graphs.gamma0())
    assert not graphs.is_anti_connected(j)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _random_graph(rng, n, p, prefix):
    vs = [f"{prefix}{i}" for i in range(n)]
    return Graph(vs, [(u, v) for u, v in itertools.combinations(vs, 2) if rng.random() < p])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_induced_search_against_networkx(seed):
    rng = random.Random(seed)
    pattern = _random_graph(rng, rng.randint(1, 5), rng.random(), "p")
    host = _random_graph(rng, rng.randint(1, 9), rng.random(), "h")
    ours = graphs.induced_embeddings(pattern, host)
    for m in ours:
        assert graphs.is_induced_embedding(pattern, host, m)
    matcher = isomorphism.GraphMatcher(_nx(host), _nx(pattern))
    theirs = {tuple(sorted((p, h) for h, p in m.items())) for m in matcher.subgraph_isomorphisms_iter()}
    assert {tuple(sorted(m.items())) for m in ours} == theirs


def test_bitset_host_matches_graph_host():
    rng = random.Random(7)
    host = _random_graph(rng, 14, 0.4, "h")
    index = {v: i for i, v in enumerate(host.vertices)}
    adj = [sum(1 << index[w] for w in host.neighbors(v)) for v in host.vertices]
    bits = graphs.BitsetHost(host.vertices, adj)
    pattern = graphs.cycle4()
    a = graphs.induced_embeddings(pattern, host)
    b = graphs.induced_embeddings(pattern, bits)
    assert a == b
    assert bits.number_of_edges() == host.number_of_edges()
