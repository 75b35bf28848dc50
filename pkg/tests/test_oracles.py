"""Exact oracles against independent brute-force enumeration."""

import pytest
from hypothesis import given, settings

from dicolor import (
    Digraph,
    Dicoloring,
    InstanceTooLargeError,
    chromatic_and_alpha,
    dichromatic_number,
    independence_number_digraph,
    is_k_dicolorable,
    max_acyclic_set,
    verify_dicoloring,
)
from dicolor.graphs import digon_saturation, make_graph
from dicolor.oracles import maximum_independent_set

from conftest import (
    all_graphs,
    brute_alpha_vec,
    brute_chromatic,
    brute_dichromatic,
    brute_independence,
    digraphs,
    digon_clique,
    random_digraph,
    rotational_r5,
    transitive_tournament,
)


class TestVerifyDicoloring:
    def test_c3_two_classes_ok(self, c3):
        assert verify_dicoloring(c3, Dicoloring((0, 0, 1))) is None

    def test_c3_one_class_bad(self, c3):
        bad = verify_dicoloring(c3, Dicoloring((0, 0, 0)))
        assert bad is not None
        color, cert = bad
        assert color == 0
        assert cert.vertices == (0, 1, 2)

    def test_digon_same_class_bad(self, digon):
        assert verify_dicoloring(digon, Dicoloring((0, 0))) is not None

    def test_partial_rejected(self, c3):
        with pytest.raises(ValueError):
            verify_dicoloring(c3, Dicoloring((0, 0)))


class TestIsKDicolorable:
    def test_c3_one_color_impossible(self, c3):
        assert is_k_dicolorable(c3, 1) is None

    def test_c3_two_colors(self, c3):
        col = is_k_dicolorable(c3, 2)
        assert col is not None
        assert verify_dicoloring(c3, col) is None

    def test_r5_two_colors(self):
        # brute force over all 2-partitions of 5 vertices confirms one exists
        D = rotational_r5()
        assert brute_dichromatic(5, list(D.arcs())) == 2
        col = is_k_dicolorable(D, 2)
        assert col is not None
        assert verify_dicoloring(D, col) is None

    def test_size_guard(self):
        with pytest.raises(InstanceTooLargeError):
            is_k_dicolorable(transitive_tournament(25), 2)


class TestDichromaticNumber:
    def test_transitive_tournament(self):
        for n in (1, 4, 7):
            k, col = dichromatic_number(transitive_tournament(n))
            assert k == 1
            assert verify_dicoloring(transitive_tournament(n), col) is None

    def test_c3(self, c3):
        assert dichromatic_number(c3)[0] == 2

    def test_digon_clique_3(self):
        assert dichromatic_number(digon_clique(3))[0] == 3

    @given(digraphs(max_n=5))
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, D):
        k, col = dichromatic_number(D)
        assert verify_dicoloring(D, col) is None
        assert col.num_colors <= k
        assert k == brute_dichromatic(D.n, list(D.arcs()))


class TestMaxAcyclicSet:
    def test_transitive_tournament(self):
        assert max_acyclic_set(transitive_tournament(6)).size == 6

    def test_c3(self, c3):
        assert max_acyclic_set(c3).size == 2

    def test_r5_by_subset_enumeration(self):
        D = rotational_r5()
        assert brute_alpha_vec(5, list(D.arcs())) == 3
        witness = max_acyclic_set(D)
        assert witness.size == 3

    def test_witness_is_acyclic(self):
        for seed in range(5):
            D = random_digraph(9, 0.4, seed)
            witness = max_acyclic_set(D)
            from dicolor.graphs import find_cycle, mask_of

            assert find_cycle(D, mask_of(witness.vertices)) is None
            assert witness.size == brute_alpha_vec(D.n, list(D.arcs()))

    def test_size_guard(self):
        with pytest.raises(InstanceTooLargeError):
            max_acyclic_set(transitive_tournament(29))


class TestChromaticAndAlpha:
    def test_triangle(self):
        chi, alpha, (coloring, mis) = chromatic_and_alpha(
            make_graph(3, [(0, 1), (0, 2), (1, 2)])
        )
        assert (chi, alpha) == (3, 1)
        assert len(set(coloring)) == 3
        assert len(mis) == 1

    def test_c4(self):
        chi, alpha, _ = chromatic_and_alpha(make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        assert (chi, alpha) == (2, 2)

    def test_empty_graph(self):
        chi, alpha, _ = chromatic_and_alpha(make_graph(5, []))
        assert (chi, alpha) == (1, 5)

    def test_all_graphs_n4_against_brute(self):
        for edges in all_graphs(4):
            G = make_graph(4, edges)
            chi, alpha, (coloring, mis) = chromatic_and_alpha(G)
            assert chi == brute_chromatic(4, edges)
            assert alpha == brute_independence(4, edges)
            assert all(coloring[u] != coloring[v] for u, v in edges)
            assert not any(u in mis and v in mis for u, v in edges)


class TestIndependenceNumberDigraph:
    def test_tournament(self):
        assert independence_number_digraph(transitive_tournament(5)) == 1

    def test_c4(self, c4):
        assert independence_number_digraph(c4) == 2

    def test_isolated(self):
        assert independence_number_digraph(Digraph(3, [])) == 3


class TestStructuralInvariants:
    def test_digon_saturation_matches_undirected(self):
        # chi-vec and alpha-vec of the digon-saturated graph equal chi and
        # alpha of the source graph, for every graph on up to 4 vertices
        for n in range(1, 5):
            for edges in all_graphs(n):
                G = make_graph(n, edges)
                D = digon_saturation(G)
                assert dichromatic_number(D)[0] == brute_chromatic(n, edges)
                assert max_acyclic_set(D).size == brute_independence(n, edges)

    def test_arc_monotonicity_sampled(self):
        # adding arcs never decreases the dichromatic number and never
        # increases the acyclic number
        for seed in range(8):
            D = random_digraph(7, 0.25, seed)
            arcs = set(D.arcs())
            missing = [
                (u, v)
                for u in range(7)
                for v in range(7)
                if u != v and (u, v) not in arcs
            ]
            if not missing:
                continue
            extra = missing[seed % len(missing)]
            D2 = Digraph(7, list(arcs) + [extra])
            assert dichromatic_number(D2)[0] >= dichromatic_number(D)[0]
            assert max_acyclic_set(D2).size <= max_acyclic_set(D).size

    def test_mis_guard(self):
        with pytest.raises(InstanceTooLargeError):
            maximum_independent_set(make_graph(29, []))
