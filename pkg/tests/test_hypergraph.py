import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlag import (
    Ordering,
    RSet,
    UniformHypergraph,
    colex_compare,
    colex_rank,
    colex_segment,
    colex_unrank,
    complement_in_clique,
    complete_graph,
    elementary_compress,
    is_left_compressed,
    left_compress_fixpoint,
    with_universe,
)
from oracles import brute_colex_sets, brute_is_left_compressed


def rset(*vs):
    return RSet.of(*vs)


class TestRSet:
    def test_invariants(self):
        with pytest.raises(ValueError):
            RSet((2, 1))
        with pytest.raises(ValueError):
            RSet((0, 1))
        with pytest.raises(ValueError):
            RSet(())
        with pytest.raises(ValueError):
            RSet.of(1, 2, 2)

    def test_mask(self):
        assert rset(1, 3).mask == 0b101
        assert rset(2, 3, 4).mask == 0b1110


class TestGraphConstruction:
    def test_duplicate_edges_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            UniformHypergraph(3, 4, [(1, 2, 3), (1, 2, 3)])

    def test_arity_and_range_checks(self):
        with pytest.raises(ValueError):
            UniformHypergraph(3, 4, [(1, 2)])
        with pytest.raises(ValueError):
            UniformHypergraph(3, 4, [(1, 2, 5)])
        with pytest.raises(ValueError):
            UniformHypergraph(3, 2)
        with pytest.raises(ValueError):
            UniformHypergraph(3, 65)

    def test_edges_stored_in_colex_order(self):
        G = UniformHypergraph(3, 5, [(1, 2, 5), (2, 3, 4), (1, 2, 3)])
        assert [e.vertices for e in G.edges] == [(1, 2, 3), (2, 3, 4), (1, 2, 5)]


class TestColex:
    def test_compare_examples(self):
        assert colex_compare(rset(2, 4, 6), rset(1, 5, 6)) is Ordering.LESS
        assert colex_compare(rset(1, 2, 3), rset(1, 2, 3)) is Ordering.EQUAL
        assert colex_compare(rset(1, 2, 3), rset(1, 2, 4)) is Ordering.LESS
        assert colex_compare(rset(1, 2, 4), rset(1, 2, 3)) is Ordering.GREATER
        with pytest.raises(ValueError):
            colex_compare(rset(1, 2), rset(1, 2, 3))

    def test_rank_examples(self):
        assert colex_rank(rset(1, 2, 3)) == 1
        assert colex_rank(rset(2, 3, 4)) == 4
        assert colex_rank(rset(1, 2, 5)) == 5

    def test_unrank_examples(self):
        assert colex_unrank(3, 1).vertices == (1, 2, 3)
        assert colex_unrank(3, 4).vertices == (2, 3, 4)
        assert colex_unrank(2, 3).vertices == (2, 3)
        with pytest.raises(ValueError):
            colex_unrank(3, 0)

    def test_rank_matches_brute_force_enumeration(self):
        for r in (2, 3, 4):
            sets = brute_colex_sets(r, 60)
            for k, s in enumerate(sets, start=1):
                assert colex_rank(RSet(s)) == k
                assert colex_unrank(r, k).vertices == s

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_round_trip_to_2000(self, r):
        for k in range(1, 2001):
            assert colex_rank(colex_unrank(r, k)) == k

    def test_compare_agrees_with_rank_on_random_pairs(self):
        rng = np.random.default_rng(42)
        for _ in range(10_000):
            r = int(rng.integers(2, 6))
            ka, kb = int(rng.integers(1, 500)), int(rng.integers(1, 500))
            A, B = colex_unrank(r, ka), colex_unrank(r, kb)
            cmp = colex_compare(A, B)
            assert cmp == Ordering(int(np.sign(ka - kb)))

    @given(st.integers(2, 5), st.integers(1, 1500))
    @settings(max_examples=150, deadline=None)
    def test_round_trip_property(self, r, k):
        assert colex_rank(colex_unrank(r, k)) == k


class TestColexSegment:
    def test_examples(self):
        G = colex_segment(3, 4)
        assert G == complete_graph(4, 3)
        assert colex_segment(3, 0).m == 0
        G5 = colex_segment(3, 5)
        assert {e.vertices for e in G5.edges} == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5)}

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_prefix_property(self, r):
        for t in range(r, 11):
            assert colex_segment(r, comb(t, r)) == complete_graph(t, r)

    def test_minimal_universe_and_compression(self):
        for r, m in [(3, 1), (3, 7), (3, 11), (4, 6), (2, 4)]:
            G = colex_segment(r, m)
            assert comb(G.n, r) >= m
            assert G.n == r or comb(G.n - 1, r) < m
            assert is_left_compressed(G)


class TestCompression:
    def test_is_left_compressed_examples(self):
        assert is_left_compressed(complete_graph(4, 3))
        assert not is_left_compressed(UniformHypergraph(3, 5, [(1, 2, 3), (1, 2, 5)]))
        assert is_left_compressed(colex_segment(3, 5))

    def test_is_left_compressed_matches_brute_force(self):
        rng = np.random.default_rng(7)
        ground = list(itertools.combinations(range(1, 6), 3))
        for _ in range(300):
            m = int(rng.integers(0, 8))
            picks = rng.permutation(len(ground))[:m]
            edges = {ground[i] for i in picks}
            G = UniformHypergraph(3, 5, edges)
            assert is_left_compressed(G) == brute_is_left_compressed(edges, 3, 5)

    def test_elementary_compress_examples(self):
        G = UniformHypergraph(3, 5, [(1, 2, 3), (1, 2, 5)])
        assert elementary_compress(G, 4, 5) == UniformHypergraph(3, 5, [(1, 2, 3), (1, 2, 4)])
        G2 = UniformHypergraph(3, 4, [(1, 2, 3), (1, 2, 4)])
        assert elementary_compress(G2, 1, 2) == G2
        G3 = UniformHypergraph(3, 4, [(1, 3, 4), (2, 3, 4)])
        assert elementary_compress(G3, 1, 2) == G3
        with pytest.raises(ValueError):
            elementary_compress(G, 5, 4)

    def test_fixpoint_examples(self):
        G = UniformHypergraph(3, 5, [(1, 3, 5)])
        assert left_compress_fixpoint(G) == UniformHypergraph(3, 5, [(1, 2, 3)])
        G2 = UniformHypergraph(3, 5, [(1, 2, 3), (1, 2, 5)])
        assert left_compress_fixpoint(G2) == UniformHypergraph(3, 5, [(1, 2, 3), (1, 2, 4)])
        C = colex_segment(3, 5)
        assert left_compress_fixpoint(C) == C

    def test_fixpoint_is_compressed_idempotent_and_size_preserving(self):
        rng = np.random.default_rng(11)
        ground = list(itertools.combinations(range(1, 8), 3))
        for _ in range(120):
            m = int(rng.integers(1, 13))
            picks = rng.permutation(len(ground))[:m]
            G = UniformHypergraph(3, 7, [ground[i] for i in picks])
            F = left_compress_fixpoint(G)
            assert F.m == G.m
            assert is_left_compressed(F)
            assert left_compress_fixpoint(F) == F


class TestComplement:
    def test_examples(self):
        G = UniformHypergraph(3, 4, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        assert complement_in_clique(G, 4) == UniformHypergraph(3, 4, [(2, 3, 4)])
        empty = UniformHypergraph(3, 4)
        assert complement_in_clique(empty, 4) == complete_graph(4, 3)
        with pytest.raises(ValueError):
            complement_in_clique(complete_graph(5, 3), 4)

    def test_involution(self):
        rng = np.random.default_rng(3)
        ground = list(itertools.combinations(range(1, 7), 3))
        for _ in range(60):
            m = int(rng.integers(0, 12))
            picks = rng.permutation(len(ground))[:m]
            G = UniformHypergraph(3, 6, [ground[i] for i in picks])
            assert complement_in_clique(complement_in_clique(G, 6), 6) == with_universe(G, 6)


def test_with_universe_rejects_shrinking():
    with pytest.raises(ValueError):
        with_universe(complete_graph(5, 3), 4)
