from math import comb

import pytest

from hlag import (
    UniformHypergraph,
    addresult_graph,
    addresultplus_case,
    case2_printed_graph,
    colex_compare,
    colex_segment,
    complement_in_clique,
    complete_graph,
    is_left_compressed,
    lemmaaddplus_graph,
    with_universe,
)


def complement_edges(G, t):
    return {e.vertices for e in complement_in_clique(G, t).edges}


def sym_diff_with_segment(G, t):
    C = with_universe(colex_segment(G.r, G.m), t)
    return len(set(G.edge_masks) ^ set(C.edge_masks))


class TestAddresult:
    def test_instance_14_3_11_1(self):
        G = addresult_graph(14, 3, 11, 1)
        assert G.m == comb(14, 3) - 11 == 353
        expected = {(j, 13, 14) for j in range(3, 13)} | {(11, 12, 14)}
        assert complement_edges(G, 14) == expected

    def test_instance_15_3_13_2(self):
        G = addresult_graph(15, 3, 13, 2)
        assert G.m == 442
        comp = complement_in_clique(G, 15)
        least = min(comp.edges, key=lambda e: e.colex_key())
        assert least.vertices == (11, 13, 15)

    def test_parameter_range(self):
        with pytest.raises(ValueError):
            addresult_graph(14, 3, 10, 1)  # a < 2i + 9
        with pytest.raises(ValueError):
            addresult_graph(14, 3, 13, 1)  # a > t - r + 1

    @pytest.mark.parametrize("t,r,a,i", [(14, 3, 11, 1), (15, 3, 13, 2), (16, 4, 12, 1), (20, 5, 14, 2)])
    def test_structural_invariants(self, t, r, a, i):
        G = addresult_graph(t, r, a, i)
        assert G.m == comb(t, r) - a
        comp = complement_in_clique(G, t)
        assert comp.m == a
        # involution round trip
        assert complement_in_clique(comp, t) == G
        assert is_left_compressed(G)
        # every complement edge contains t, so the clique on [t-1] survives
        assert all(t in e for e in comp.edges)
        clique = complete_graph(t - 1, r)
        assert all(G.has_edge(e) for e in clique.edges)
        # the advertised colex-minimum non-edge
        expected_min = tuple(sorted([t - r - i + 1, t - r + 1] + list(range(t - r + 3, t + 1))))
        least = min(comp.edges, key=lambda e: e.colex_key())
        assert least.vertices == expected_min
        assert all(colex_compare(least, e) <= 0 for e in comp.edges)
        assert sym_diff_with_segment(G, t) == 2 * i


class TestLemmaAddPlus:
    def test_instance_15_4_12(self):
        G = lemmaaddplus_graph(15, 4, 12)
        assert G.m == comb(15, 4) - 12 == 1353
        expected = (
            {(j, 13, 14, 15) for j in range(3, 13)}
            | {(11, 12, 14, 15), (11, 12, 13, 15)}
        )
        assert complement_edges(G, 15) == expected

    def test_rank_and_range_errors(self):
        with pytest.raises(ValueError):
            lemmaaddplus_graph(15, 3, 12)
        with pytest.raises(ValueError):
            lemmaaddplus_graph(15, 4, 11)
        with pytest.raises(ValueError):
            lemmaaddplus_graph(15, 4, 13)

    @pytest.mark.parametrize("t,r,a", [(15, 4, 12), (16, 4, 13), (18, 5, 12)])
    def test_structural_invariants(self, t, r, a):
        G = lemmaaddplus_graph(t, r, a)
        assert G.m == comb(t, r) - a
        comp = complement_in_clique(G, t)
        assert comp.m == a
        assert is_left_compressed(G)
        assert all(t in e for e in comp.edges)
        assert sym_diff_with_segment(G, t) == 4


class TestCases:
    def test_case1_equals_gap_index_1(self):
        assert addresultplus_case(15, 4, 12, 1) == addresult_graph(15, 4, 12, 1)

    def test_case3_equals_double_defect(self):
        assert addresultplus_case(15, 4, 12, 3) == lemmaaddplus_graph(15, 4, 12)

    def test_case2_variants(self):
        compressed = addresultplus_case(15, 4, 12, 2)
        printed = addresultplus_case(15, 4, 12, 2, printed_variant=True)
        assert is_left_compressed(compressed)
        assert not is_left_compressed(printed)
        assert printed == case2_printed_graph(15, 4, 12)
        assert compressed != printed
        assert sym_diff_with_segment(compressed, 15) == 4
        assert sym_diff_with_segment(printed, 15) == 4

    def test_case2_is_constructible_at_the_lower_a_bound(self):
        # a=12 sits below the gap-index-2 window (needs a >= 13), but the
        # case dispatcher builds the same complement pattern regardless
        G = addresultplus_case(15, 4, 12, 2)
        assert G.m == comb(15, 4) - 12
        with pytest.raises(ValueError):
            addresult_graph(15, 4, 12, 2)

    def test_case_validation(self):
        with pytest.raises(ValueError):
            addresultplus_case(15, 4, 12, 4)
        with pytest.raises(ValueError):
            addresultplus_case(15, 3, 12, 1)
        with pytest.raises(ValueError):
            addresultplus_case(15, 4, 12, 1, printed_variant=True)
