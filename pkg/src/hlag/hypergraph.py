"""Uniform hypergraphs with colex ordering, left-compression, and complements.

Vertices are 1-based integer labels.  Universe sizes are capped at 64, so
every edge carries an integer bitmask (bit ``v-1`` set iff vertex ``v`` is
present), which makes membership and swap tests O(1).  All types are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_UNIVERSE = 64


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class RSet:
    """An r-element vertex set (an edge): strictly increasing 1-based labels."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise ValueError("RSet must be nonempty")
        if vs[0] < 1:
            raise ValueError(f"vertex labels must be >= 1, got {vs}")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"vertices must be strictly increasing, got {vs}")

    @classmethod
    def of(cls, *vertices: int) -> "RSet":
        """Build an RSet from labels in any order (duplicates are an error)."""
        return cls(tuple(sorted(int(v) for v in vertices)))

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << (v - 1)
        return m

    @property
    def r(self) -> int:
        return len(self.vertices)

    def colex_key(self) -> tuple[int, ...]:
        """Sort key realizing colex order: compare largest elements first."""
        return tuple(reversed(self.vertices))

    def replace(self, old: int, new: int) -> "RSet":
        """The set with ``old`` swapped for ``new`` (must stay a valid set)."""
        return RSet.of(*(new if v == old else v for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __repr__(self) -> str:
        return f"RSet({''.join(str(v) for v in self.vertices) if max(self.vertices) < 10 else self.vertices})"


def _as_rset(edge) -> RSet:
    if isinstance(edge, RSet):
        return edge
    return RSet(tuple(sorted(int(v) for v in edge)))


class UniformHypergraph:
    """An r-uniform hypergraph on the vertex universe [n].

    Edges are deduplicated is an error: passing the same edge twice raises,
    because the edge count m is semantically load-bearing throughout.
    Edges are stored in colex order.
    """

    __slots__ = ("r", "n", "edges", "_mask_set", "__dict__")

    def __init__(self, r: int, n: int, edges: Iterable = ()):
        r, n = int(r), int(n)
        if r < 1:
            raise ValueError(f"rank r must be >= 1, got {r}")
        if n < r:
            raise ValueError(f"universe size n={n} must be >= r={r}")
        if n > MAX_UNIVERSE:
            raise ValueError(f"universe size n={n} exceeds the cap of {MAX_UNIVERSE}")
        canon = []
        seen = set()
        for e in edges:
            rs = _as_rset(e)
            if rs.r != r:
                raise ValueError(f"edge {rs.vertices} has {rs.r} vertices, expected r={r}")
            if rs.vertices[-1] > n:
                raise ValueError(f"edge {rs.vertices} leaves the universe [{n}]")
            if rs.mask in seen:
                raise ValueError(f"duplicate edge {rs.vertices}")
            seen.add(rs.mask)
            canon.append(rs)
        canon.sort(key=RSet.colex_key)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "_mask_set", frozenset(seen))

    def __setattr__(self, name, value):
        raise AttributeError("UniformHypergraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(e.mask for e in self.edges)

    def has_edge(self, edge) -> bool:
        return _as_rset(edge).mask in self._mask_set

    def has_edge_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    @cached_property
    def index_array(self) -> np.ndarray:
        """(m, r) int64 array of 0-based vertex indices, rows in colex order."""
        if self.m == 0:
            return np.zeros((0, self.r), dtype=np.int64)
        return np.array([[v - 1 for v in e.vertices] for e in self.edges], dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        return (self.r, self.n, self._mask_set) == (other.r, other.n, other._mask_set)

    def __hash__(self) -> int:
        return hash((self.r, self.n, self._mask_set))

    def __repr__(self) -> str:
        return f"UniformHypergraph(r={self.r}, n={self.n}, m={self.m})"


def complete_graph(t: int, r: int) -> UniformHypergraph:
    """The complete r-graph on [t] (all C(t, r) edges)."""
    if not 1 <= r <= t:
        raise ValueError(f"need 1 <= r <= t, got r={r}, t={t}")
    return UniformHypergraph(r, t, itertools.combinations(range(1, t + 1), r))


def with_universe(G: UniformHypergraph, n: int) -> UniformHypergraph:
    """Re-embed G in a (weakly) larger universe [n]."""
    if n < G.n:
        raise ValueError(f"cannot shrink universe from {G.n} to {n}")
    return UniformHypergraph(G.r, n, G.edges)


# ---------------------------------------------------------------------------
# colex order


def colex_compare(A: RSet, B: RSet) -> Ordering:
    """Three-way colex comparison: A < B iff max(A trianglesym B) is in B."""
    A, B = _as_rset(A), _as_rset(B)
    if A.r != B.r:
        raise ValueError(f"colex_compare needs equal lengths, got {A.r} and {B.r}")
    ka, kb = A.colex_key(), B.colex_key()
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.LESS if ka < kb else Ordering.GREATER


def colex_rank(A: RSet) -> int:
    """1-based position of A in the colex order of all r-sets of positive ints.

    Combinatorial number system: rank(A) = 1 + sum_p C(a_p - 1, p).
    """
    A = _as_rset(A)
    return 1 + sum(comb(v - 1, p) for p, v in enumerate(A.vertices, start=1))


def colex_unrank(r: int, k: int) -> RSet:
    """The r-set of 1-based colex rank k (inverse of colex_rank)."""
    if r < 1:
        raise ValueError(f"rank r must be >= 1, got {r}")
    if k < 1:
        raise ValueError(f"colex rank must be >= 1, got {k}")
    rem = k - 1
    out = []
    for p in range(r, 0, -1):
        c = p  # smallest candidate label for position p; comb(p-1, p) = 0 <= rem
        while comb(c, p) <= rem:
            c += 1
        rem -= comb(c - 1, p)
        out.append(c)
    return RSet(tuple(reversed(out)))


def colex_segment(r: int, m: int) -> UniformHypergraph:
    """The initial colex segment with m edges, on the minimal universe.

    The universe is the smallest t with m <= C(t, r); the result is always
    left-compressed, and for m = C(t, r) it is exactly the complete graph on [t].
    """
    if m < 0:
        raise ValueError(f"edge count must be >= 0, got {m}")
    n = r
    while comb(n, r) < m:
        n += 1
    return UniformHypergraph(r, n, (colex_unrank(r, k) for k in range(1, m + 1)))


# ---------------------------------------------------------------------------
# left-compression


def is_left_compressed(G: UniformHypergraph) -> bool:
    """True iff every single-vertex left-replacement of every edge is an edge.

    Equivalent to the edge set being a downset of the coordinatewise
    dominance order on r-subsets of [n].
    """
    for e in G.edges:
        mask = e.mask
        for v in e.vertices:
            vb = 1 << (v - 1)
            for u in range(1, v):
                ub = 1 << (u - 1)
                if mask & ub:
                    continue
                if (mask ^ vb) | ub not in G._mask_set:
                    return False
    return True


def elementary_compress(G: UniformHypergraph, i: int, j: int) -> UniformHypergraph:
    """Shift vertex j to vertex i: each edge with j but not i is replaced by
    its (j -> i) swap unless that set is already an edge.  Preserves m."""
    if i >= j:
        raise ValueError(f"elementary_compress needs i < j, got i={i}, j={j}")
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    new_edges = []
    for e in G.edges:
        mask = e.mask
        if mask & jb and not mask & ib:
            swapped = (mask ^ jb) | ib
            if swapped not in G._mask_set:
                new_edges.append(e.replace(j, i))
                continue
        new_edges.append(e)
    return UniformHypergraph(G.r, G.n, new_edges)


def left_compress_fixpoint(G: UniformHypergraph) -> UniformHypergraph:
    """Apply elementary compressions over all pairs i < j until stable.

    Pairs are swept in increasing (j, i) order for reproducibility.  Each
    effective compression strictly decreases the sum of colex ranks, so the
    sweep terminates;  the result is left-compressed with the same m.
    """
    current = G
    while True:
        changed = False
        for j in range(2, current.n + 1):
            for i in range(1, j):
                nxt = elementary_compress(current, i, j)
                if nxt != current:
                    current = nxt
                    changed = True
        if not changed:
            return current


def complement_in_clique(G: UniformHypergraph, t: int) -> UniformHypergraph:
    """The complement of G inside the complete r-graph on [t].

    Involution: taking the complement twice returns G re-embedded on [t].
    """
    if any(e.vertices[-1] > t for e in G.edges):
        raise ValueError(f"G has edges outside the universe [{t}]")
    comp = (
        e for e in itertools.combinations(range(1, t + 1), G.r)
        if not G.has_edge_mask(sum(1 << (v - 1) for v in e))
    )
    return UniformHypergraph(G.r, t, comp)
