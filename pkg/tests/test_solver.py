import itertools
import random

import pytest
from hypothesis import given

from graphspan import (
    DisconnectedGraphError,
    Goal,
    Graph,
    MoveRules,
    all_pairs_distances,
    all_spans,
    connected_components,
    exists_safe_walk,
    filtered_product,
    find_witness,
    induced_subgraph,
    oracle_span,
    projections_surjective,
    radius,
    span,
)
from graphspan.rules import VARIANTS

from graphgen import (
    complete,
    cycle,
    fig1,
    path,
    product_edges_by_definition,
    random_corpus,
    random_tree,
    small_connected_corpus,
    star,
)
from strategies import connected_graphs

T, A, L = MoveRules.TRADITIONAL, MoveRules.ACTIVE, MoveRules.LAZY
V, E = Goal.VERTEX, Goal.EDGE


def values(H):
    return tuple(r.value for r in all_spans(H))


def is_path(H):
    return H.edge_count == H.n - 1 and max(map(len, H.adjacency), default=0) <= 2


class TestFilteredProduct:
    def _brute(self, H, D, rules):
        d = all_pairs_distances(H).array
        n = H.n
        keep = {p for p in range(n * n) if d[divmod(p, n)] >= D}
        edges = {(p, q) for p, q in product_edges_by_definition(H, rules.product) if p in keep and q in keep}
        return keep, edges

    def test_k2_traditional(self):
        keep, edges = self._brute(complete(2), 1, T)
        assert keep == {1, 2} and edges == {(1, 2)}
        G, pairs = filtered_product(complete(2), 1, T)
        assert pairs == [(0, 1), (1, 0)]
        assert G.edge_count == 1

    def test_k2_lazy(self):
        keep, edges = self._brute(complete(2), 1, L)
        assert keep == {1, 2} and edges == set()
        G, pairs = filtered_product(complete(2), 1, L)
        assert pairs == [(0, 1), (1, 0)]
        assert G.edge_count == 0

    @pytest.mark.parametrize("rules", list(MoveRules))
    @given(H=connected_graphs(max_n=6))
    def test_zero_is_full_product(self, rules, H):
        G, pairs = filtered_product(H, 0, rules)
        n = H.n
        assert len(pairs) == n * n
        assert {(pairs[a][0] * n + pairs[a][1], pairs[b][0] * n + pairs[b][1]) for a, b in G.edges()} == (
            product_edges_by_definition(H, rules.product)
        )

    @pytest.mark.parametrize("rules", list(MoveRules))
    @given(H=connected_graphs(max_n=6))
    def test_matches_brute_force(self, rules, H):
        n = H.n
        for D in range(0, radius(H) + 2):
            keep, edges = self._brute(H, D, rules)
            G, pairs = filtered_product(H, D, rules)
            idx = [u * n + v for u, v in pairs]
            assert set(idx) == keep
            assert {(idx[a], idx[b]) for a, b in G.edges()} == edges


class TestProjectionsSurjective:
    def test_k2_swap_component_edge_goal(self):
        assert projections_surjective(complete(2), [(0, 1), (1, 0)], [(1, 2)], E)

    def test_single_pair_misses_vertex(self):
        assert not projections_surjective(complete(2), [(0, 1)], [], V)

    def test_diagonal_covers_path(self):
        H = path(3)
        G, pairs = filtered_product(H, 0, T)
        assert projections_surjective(H, pairs, [], V)

    def test_edge_goal_needs_moves_on_both_sides(self):
        # only the first coordinate ever moves
        H = complete(2)
        assert not projections_surjective(H, [(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 2), (1, 3)], E)

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=5))
    def test_component_scan_agrees_with_solver(self, rules, goal, H):
        """Per-component check through the generic graph tools matches the vectorized solver."""
        n = H.n
        for D in range(1, radius(H) + 1):
            G, pairs = filtered_product(H, D, rules)
            part = connected_components(G)
            any_ok = False
            for cid in range(part.count):
                members = part.members(cid)
                sub, mapping = induced_subgraph(G, members)
                cp = [pairs[mapping[i]] for i in range(sub.n)]
                ce = [(cp[a][0] * n + cp[a][1], cp[b][0] * n + cp[b][1]) for a, b in sub.edges()]
                any_ok |= projections_surjective(H, cp, ce, goal)
            assert any_ok == exists_safe_walk(H, D, rules, goal)


class TestExists:
    @pytest.mark.parametrize(
        "H, D, rules, goal, expected",
        [
            (path(4), 1, T, V, True),
            (path(4), 1, L, V, False),
            (cycle(6), 3, A, E, True),
            (complete(2), 1, T, E, True),
        ],
    )
    def test_examples(self, H, D, rules, goal, expected):
        assert exists_safe_walk(H, D, rules, goal) is expected

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=6))
    def test_distance_zero_always_feasible(self, rules, goal, H):
        assert exists_safe_walk(H, 0, rules, goal)

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=7))
    def test_monotone_in_distance(self, rules, goal, H):
        flags = [exists_safe_walk(H, D, rules, goal) for D in range(radius(H) + 2)]
        assert flags == sorted(flags, reverse=True)

    def test_beyond_radius_infeasible(self):
        H = cycle(6)
        for rules, goal in VARIANTS:
            assert not exists_safe_walk(H, 4, rules, goal)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            exists_safe_walk(Graph.from_index_edges(4, [(0, 1), (2, 3)]), 1, T, V)


class TestSpan:
    def test_single_vertex(self):
        H = path(1)
        for rules, goal in VARIANTS:
            res = span(H, rules, goal)
            assert res.value == 0 and res.witness is None

    def test_examples(self):
        assert span(path(6), L, V).value == 0
        assert span(cycle(6), T, V).value == 3
        assert span(star(3), L, V).value == 1

    def test_fig1_graph(self):
        H = fig1()
        assert radius(H) == 1
        assert oracle_span(H, T, V) == 1
        assert span(H, T, V).value == 1

    def test_all_spans_examples(self):
        assert values(path(2)) == (1, 1, 1, 1, 0, 0)
        assert values(path(1)) == (0,) * 6
        c6 = values(cycle(6))
        assert c6[:4] == (3, 3, 3, 3)
        assert c6[4:] == (oracle_span(cycle(6), L, V), oracle_span(cycle(6), L, E)) == (2, 2)

    def test_all_spans_order(self):
        res = all_spans(star(3))
        assert [(r.rules, r.goal) for r in res] == [(T, V), (T, E), (A, V), (A, E), (L, V), (L, E)]

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            span(Graph.from_index_edges(3, [(0, 1)]), T, V)
        with pytest.raises(DisconnectedGraphError):
            all_spans(Graph.from_index_edges(3, [(0, 1)]))

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=7))
    def test_witness_contract(self, rules, goal, H):
        res = span(H, rules, goal)
        assert 0 <= res.value <= radius(H)
        assert (res.witness is not None) == (res.value >= 1)
        if res.witness:
            assert res.witness.epsilon == res.value
            assert res.witness.product_kind is rules.product

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=7))
    def test_linear_scan_agrees(self, rules, goal, H):
        assert span(H, rules, goal).value == span(H, rules, goal, linear=True).value

    @given(H=connected_graphs(max_n=7))
    def test_orderings(self, H):
        s = {(r.rules, r.goal): r.value for r in all_spans(H)}
        for rules in MoveRules:
            assert s[rules, E] <= s[rules, V] <= radius(H)
        for goal in Goal:
            assert s[A, goal] <= s[T, goal]
            assert s[L, goal] <= s[T, goal]

    @given(H=connected_graphs(max_n=7))
    def test_zero_characterization(self, H):
        s = values(H)
        assert (s[0] == 0) == (s[1] == 0) == (s[2] == 0) == (s[3] == 0) == (H.n == 1)
        assert (s[4] == 0) == (s[5] == 0) == is_path(H)

    def test_rad_one_equality(self):
        for H in small_connected_corpus(5):
            if H.n > 1 and radius(H) == 1:
                assert values(H)[:4] == (1, 1, 1, 1)

    def test_rad_one_cartesian_reading(self):
        """For non-path graphs of radius one both Cartesian spans are 1, confirmed by the oracle."""
        for H in small_connected_corpus(5):
            if radius(H) == 1 and not is_path(H):
                assert oracle_span(H, L, V) == oracle_span(H, L, E) == 1
                assert values(H)[4:] == (1, 1)

    def test_trees(self):
        rng = random.Random(5)
        for _ in range(20):
            T_ = random_tree(rng.randint(1, 9), rng)
            s = values(T_)
            assert s[0::2] == s[1::2]

    @pytest.mark.parametrize("rules, goal", VARIANTS)
    @given(H=connected_graphs(max_n=6))
    def test_matches_oracle(self, rules, goal, H):
        assert span(H, rules, goal).value == oracle_span(H, rules, goal)


class TestWitnessChoice:
    def test_lowest_min_index_component(self):
        # C_4 x C_4 splits by coordinate parity; at D=1 both halves project onto C_4
        # and the odd half holds pair (0, 1), the smallest kept index
        H = cycle(4)
        w = find_witness(H, 1, A, V)
        assert min(w.pair_indices()) == 1
        assert w == find_witness(H, 1, A, V)

    def test_no_witness_when_infeasible(self):
        assert find_witness(path(5), 1, L, V) is None

    def test_corpus_deterministic(self):
        for H in random_corpus(20, 8, seed=2):
            for rules, goal in VARIANTS:
                assert span(H, rules, goal) == span(H, rules, goal)
