import itertools
import random

import pytest
from hypothesis import given

from graphspan import GraphError, ProductKind, Side, build_product, connected_components, project
from graphspan.products import pair_adjacent

from graphgen import complete, cycle, path, product_edges_by_definition, random_connected, small_connected_corpus
from strategies import connected_graphs


def edges_of(P):
    return set(P.graph.edges())


class TestK2:
    def test_strong_is_k4(self):
        P = build_product(complete(2), ProductKind.STRONG)
        assert P.graph.n == 4 and P.graph.edge_count == 6

    def test_direct_is_two_edges(self):
        P = build_product(complete(2), ProductKind.DIRECT)
        # (u,v)(v,u) is pair 1 -- pair 2, (u,u)(v,v) is pair 0 -- pair 3
        assert edges_of(P) == {(1, 2), (0, 3)}

    def test_cartesian_is_c4(self):
        P = build_product(complete(2), ProductKind.CARTESIAN)
        assert P.graph.edge_count == 4
        assert all(len(a) == 2 for a in P.graph.adjacency)
        assert connected_components(P.graph).count == 1


class TestProject:
    def test_examples(self):
        n = 7
        assert project(2 * n + 5, Side.FIRST, n) == 2
        assert project(2 * n + 5, Side.SECOND, n) == 5
        assert project(0, Side.FIRST, n) == project(0, Side.SECOND, n) == 0

    @pytest.mark.parametrize("pair", [-1, 49])
    def test_out_of_range(self, pair):
        with pytest.raises(GraphError):
            project(pair, Side.FIRST, 7)


@pytest.mark.parametrize("kind", list(ProductKind))
@given(H=connected_graphs(max_n=6))
def test_matches_definition(kind, H):
    assert edges_of(build_product(H, kind)) == product_edges_by_definition(H, kind)


@pytest.mark.parametrize("kind", list(ProductKind))
@given(H=connected_graphs(max_n=6))
def test_projections_are_weak_homomorphisms(kind, H):
    P = build_product(H, kind)
    for p, q in P.graph.edges():
        for side in Side:
            a, b = P.project(p, side), P.project(q, side)
            assert a == b or H.has_edge(a, b)


def test_strong_is_disjoint_union_exhaustive():
    for H in small_connected_corpus(5):
        s = edges_of(build_product(H, ProductKind.STRONG))
        c = edges_of(build_product(H, ProductKind.CARTESIAN))
        d = edges_of(build_product(H, ProductKind.DIRECT))
        assert s == c | d
        assert not c & d


def test_edge_counts_random():
    rng = random.Random(11)
    for _ in range(40):
        H = random_connected(rng.randint(1, 9), rng)
        n, m = H.n, H.edge_count
        assert build_product(H, ProductKind.CARTESIAN).graph.edge_count == 2 * n * m
        assert build_product(H, ProductKind.DIRECT).graph.edge_count == 2 * m * m


@given(H=connected_graphs(max_n=7))
def test_strong_and_cartesian_connected(H):
    for kind in (ProductKind.STRONG, ProductKind.CARTESIAN):
        assert connected_components(build_product(H, kind).graph).count == 1


def test_direct_of_bipartite_splits():
    assert connected_components(build_product(path(4), ProductKind.DIRECT).graph).count == 2
    assert connected_components(build_product(cycle(5), ProductKind.DIRECT).graph).count == 1


def test_pair_adjacent_matches_materialized():
    H = cycle(5)
    for kind in ProductKind:
        P = build_product(H, kind)
        for p, q in itertools.product(range(25), repeat=2):
            assert pair_adjacent(H, kind, p, q) == P.graph.has_edge(p, q)


def test_materialization_limit():
    with pytest.raises(GraphError, match="limit"):
        build_product(path(10), ProductKind.STRONG, limit=8)
    assert build_product(path(10), ProductKind.STRONG, limit=None).graph.n == 100


def test_pair_labels():
    P = build_product(path(2), ProductKind.STRONG)
    assert P.graph.labels == ("0|0", "0|1", "1|0", "1|1")
