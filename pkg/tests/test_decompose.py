"""Backedge graphs, degeneracy coloring, mixed shortest paths, the path
decomposition, and the palette combiner."""

import random

import pytest
from hypothesis import given, settings

from dicolor import (
    Digraph,
    PaletteBudget,
    Step,
    VertexChain,
    backedge_graph,
    build_path_decomposition,
    color_via_backedge,
    combine_palettes,
    degeneracy_color,
    dichromatic_number,
    mixed_shortest_path,
    verify_dicoloring,
)
from dicolor.decompose import BudgetExceededError
from dicolor.graphs import find_cycle, make_graph, mask_of

from conftest import digraphs, random_digraph, random_oriented, transitive_tournament


class TestBackedgeGraph:
    def test_c3_identity_order(self, c3):
        G = backedge_graph(c3, [0, 1, 2])
        assert set(G.edges()) == {(0, 2)}

    def test_transitive_topo_order_empty(self):
        D = transitive_tournament(5)
        assert backedge_graph(D, [0, 1, 2, 3, 4]).edge_count == 0

    def test_digon_always_edge(self, digon):
        assert set(backedge_graph(digon, [0, 1]).edges()) == {(0, 1)}
        assert set(backedge_graph(digon, [1, 0]).edges()) == {(0, 1)}

    def test_non_permutation_rejected(self, c3):
        with pytest.raises(ValueError):
            backedge_graph(c3, [0, 1, 1])


class TestDegeneracyColor:
    def test_edgeless(self):
        d, colors = degeneracy_color(make_graph(4, []))
        assert d == 0
        assert set(colors) == {0}

    def test_triangle(self):
        d, colors = degeneracy_color(make_graph(3, [(0, 1), (0, 2), (1, 2)]))
        assert d == 2
        assert len(set(colors)) == 3

    def test_path(self):
        d, colors = degeneracy_color(make_graph(4, [(0, 1), (1, 2), (2, 3)]))
        assert d == 1
        assert len(set(colors)) <= 2

    def test_proper_and_within_bound_random(self):
        for seed in range(10):
            rng = random.Random(seed)
            n = rng.randrange(2, 12)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
            G = make_graph(n, edges)
            d, colors = degeneracy_color(G)
            assert all(colors[u] != colors[v] for u, v in edges)
            assert len(set(colors)) <= d + 1


class TestColorViaBackedge:
    def test_transitive_topo_one_color(self):
        D = transitive_tournament(6)
        col = color_via_backedge(D, list(range(6)))
        assert col.num_colors == 1

    def test_c3_two_colors(self, c3):
        col = color_via_backedge(c3, [0, 1, 2])
        assert col.num_colors == 2
        assert verify_dicoloring(c3, col) is None

    @given(digraphs(max_n=7))
    @settings(max_examples=60)
    def test_always_valid(self, D):
        order = list(range(D.n))
        col = color_via_backedge(D, order)
        assert verify_dicoloring(D, col) is None


class TestMixedShortestPath:
    def test_c3_all_arcs(self, c3):
        chain = mixed_shortest_path(c3, 0, 2)
        assert chain.vertices == (0, 1, 2)
        assert chain.steps == (Step.ARC, Step.ARC)

    def test_detour_around_backward_arc(self):
        D = Digraph(3, [(1, 0)])
        chain = mixed_shortest_path(D, 0, 1)
        assert chain.vertices == (0, 2, 1)
        assert chain.steps == (Step.NONARC, Step.NONARC)

    def test_identity_chain(self, c3):
        chain = mixed_shortest_path(c3, 1, 1)
        assert chain.vertices == (1,)
        assert chain.k == 0

    def test_unreachable(self):
        # complete bipartite-ish digon barrier: 0 cannot leave
        D = Digraph(2, [(1, 0)])
        assert mixed_shortest_path(D, 0, 1) is None

    @given(digraphs(max_n=7))
    @settings(max_examples=60)
    def test_at_most_arc_distance(self, D):
        # mixed distance never exceeds arc-only BFS distance
        import collections

        for s in range(D.n):
            dist = {s: 0}
            queue = collections.deque([s])
            while queue:
                u = queue.popleft()
                for w in range(D.n):
                    if D.has_arc(u, w) and w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            for t, arc_d in dist.items():
                chain = mixed_shortest_path(D, s, t)
                assert chain is not None
                assert chain.k <= arc_d
                chain.validate(D)


def _chain_for(D, s, t):
    chain = mixed_shortest_path(D, s, t)
    assert chain is not None
    return chain


class TestBuildPathDecomposition:
    def test_k0_partition(self, c3):
        decomp = build_path_decomposition(c3, _chain_for(c3, 0, 0))
        assert decomp.z == {0}
        assert decomp.d_sets[0] == {1}  # out-neighborhood
        assert decomp.d_sets[1] == {2}  # in-neighborhood
        assert decomp.n_sets[0] == frozenset()
        decomp.check_partition()

    def test_c4_hand_evaluated(self, c4):
        # chain 0 -> 1: D1 empty, N0={2}, N1={3}, endpoint zones empty,
        # chain vertices to Z
        chain = _chain_for(c4, 0, 1)
        assert chain.vertices == (0, 1)
        decomp = build_path_decomposition(c4, chain)
        assert decomp.d_sets == (frozenset(), frozenset(), frozenset())
        assert decomp.n_sets == (frozenset({2}), frozenset({3}))
        assert decomp.z == {0, 1}

    def test_invalid_chain_rejected(self, c3):
        with pytest.raises(ValueError):
            build_path_decomposition(
                c3, VertexChain((0, 2), (Step.ARC,))
            )

    def test_random_decomppositions_partition_and_long_arcs(self):
        built = 0
        for seed in range(200):
            rng = random.Random(seed)
            n = rng.randrange(4, 16)
            D = random_digraph(n, rng.choice([0.15, 0.3, 0.5]), seed * 7 + 1)
            s, t = rng.randrange(n), rng.randrange(n)
            chain = mixed_shortest_path(D, s, t)
            if chain is None:
                continue
            decomp = build_path_decomposition(D, chain)
            decomp.check_partition()
            decomp.check_long_arcs()
            if chain.k >= 2:
                assert decomp.z == frozenset()
            built += 1
        assert built >= 150


def _oracle_zone_coloring(D, members):
    """Exact local coloring of one zone, as {vertex: local color}."""
    from dicolor.graphs import induced

    sub, labels = induced(D, members)
    _, col = dichromatic_number(sub)
    return {labels[i]: col.colors[i] for i in range(sub.n)}, col.num_colors


class TestCombinePalettes:
    def test_singleton_remainder_one_color(self):
        D = Digraph(1, [])
        decomp = build_path_decomposition(D, _chain_for(D, 0, 0))
        col = combine_palettes(decomp, PaletteBudget(b=1, c=1, d=0), {})
        assert col.num_colors == 1

    def test_tournament_five_colors(self):
        # strongly connected tournament, b=c=1, d=0: at most five colors
        arcs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
        arcs += [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)]
        D = Digraph(5, arcs)  # rotational tournament
        chain = _chain_for(D, 0, 4)
        decomp = build_path_decomposition(D, chain)
        subs = {}
        for i, zone in enumerate(decomp.d_sets):
            if zone:
                assert find_cycle(D, mask_of(zone)) is None
                subs[("D", i)] = {v: 0 for v in zone}
        for i, zone in enumerate(decomp.n_sets):
            if zone:
                subs[("N", i)] = {v: 0 for v in zone}
        col = combine_palettes(decomp, PaletteBudget(b=1, c=1, d=0), subs)
        assert col.num_colors <= 5
        assert verify_dicoloring(D, col) is None

    def test_budget_overflow_rejected(self, c3):
        decomp = build_path_decomposition(c3, _chain_for(c3, 0, 0))
        subs = {("D", 0): {1: 1}, ("D", 1): {2: 0}}  # local color 1 over c=1
        with pytest.raises(BudgetExceededError):
            combine_palettes(decomp, PaletteBudget(b=1, c=1, d=0), subs)

    def test_short_chain_bound(self):
        # k <= 1 chains obey 2d + c + 2b + 2
        count = 0
        for seed in range(120):
            rng = random.Random(seed)
            n = rng.randrange(3, 11)
            D = random_digraph(n, 0.45, seed * 13 + 5)
            s, t = rng.randrange(n), rng.randrange(n)
            chain = mixed_shortest_path(D, s, t)
            if chain is None or chain.k > 1:
                continue
            decomp = build_path_decomposition(D, chain)
            subs = {}
            b = c = d = 1
            for kind, zones in (("D", decomp.d_sets), ("N", decomp.n_sets)):
                for i, zone in enumerate(zones):
                    if not zone:
                        continue
                    coloring, used = _oracle_zone_coloring(D, zone)
                    subs[(kind, i)] = coloring
                    if kind == "D" and i in (0, decomp.k + 1):
                        b = max(b, used)
                    elif kind == "D":
                        c = max(c, used)
                    else:
                        d = max(d, used)
            budget = PaletteBudget(b=b, c=c, d=d)
            col = combine_palettes(decomp, budget, subs)
            assert verify_dicoloring(D, col) is None
            assert col.num_colors <= 2 * d + c + 2 * b + 2
            count += 1
        assert count >= 40

    def test_random_decompositions_always_valid(self):
        # the combiner's output verifies whenever the preconditions hold;
        # budgets here are measured zone dichromatic numbers
        done = 0
        for seed in range(300):
            rng = random.Random(seed + 10_000)
            n = rng.randrange(4, 13)
            D = random_digraph(n, rng.choice([0.2, 0.4]), seed * 3 + 2)
            s, t = rng.randrange(n), rng.randrange(n)
            chain = mixed_shortest_path(D, s, t)
            if chain is None:
                continue
            decomp = build_path_decomposition(D, chain)
            subs = {}
            b = c = d = 1
            for kind, zones in (("D", decomp.d_sets), ("N", decomp.n_sets)):
                for i, zone in enumerate(zones):
                    if not zone:
                        continue
                    coloring, used = _oracle_zone_coloring(D, zone)
                    subs[(kind, i)] = coloring
                    if kind == "D" and i in (0, decomp.k + 1):
                        b = max(b, used)
                    elif kind == "D":
                        c = max(c, used)
                    else:
                        d = max(d, used)
            budget = PaletteBudget(b=b, c=c, d=d)
            col = combine_palettes(decomp, budget, subs)
            assert verify_dicoloring(D, col) is None
            assert col.num_colors <= budget.color_bound(decomp.k)
            done += 1
        assert done >= 200

    def test_save_ends_on_c3free_inputs(self):
        # on a C3-free digraph no arc runs from D_0 to D_{k+1}, so the
        # shared-extras variant applies and stays valid
        from dicolor.c3free import find_directed_triangle

        done = 0
        for seed in range(400):
            rng = random.Random(seed + 77)
            n = rng.randrange(5, 13)
            D = random_oriented(n, 0.3, seed * 11 + 3)
            if find_directed_triangle(D) is not None:
                continue
            s, t = rng.randrange(n), rng.randrange(n)
            chain = mixed_shortest_path(D, s, t)
            if chain is None:
                continue
            decomp = build_path_decomposition(D, chain)
            end_mask = mask_of(decomp.d_sets[decomp.k + 1])
            assert all(
                not (D.out_mask(v) & end_mask) for v in decomp.d_sets[0]
            ), "C3-free decomposition has an endpoint-to-endpoint arc"
            subs = {}
            b = c = d = 1
            for kind, zones in (("D", decomp.d_sets), ("N", decomp.n_sets)):
                for i, zone in enumerate(zones):
                    if not zone:
                        continue
                    coloring, used = _oracle_zone_coloring(D, zone)
                    subs[(kind, i)] = coloring
                    if kind == "D" and i in (0, decomp.k + 1):
                        b = max(b, used)
                    elif kind == "D":
                        c = max(c, used)
                    else:
                        d = max(d, used)
            b = max(b, c, d)  # the saving case assumes b is the max
            budget = PaletteBudget(b=b, c=c, d=d, save_ends=True)
            col = combine_palettes(decomp, budget, subs)
            assert verify_dicoloring(D, col) is None
            assert col.num_colors <= budget.color_bound(decomp.k)
            done += 1
        assert done >= 60
