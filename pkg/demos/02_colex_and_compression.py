"""Colex order, initial segments, and left-compression.

The colex (colexicographic) order compares r-sets by their largest
elements; the first m sets in this order form the conjectured maximizer
among all m-edge r-graphs.  Left-compression pushes any graph toward that
shape without changing its edge count and without decreasing its
optimum value.
"""

from hlag import (
    OptimizerConfig,
    RSet,
    UniformHypergraph,
    colex_compare,
    colex_rank,
    colex_segment,
    colex_unrank,
    complement_in_clique,
    is_left_compressed,
    left_compress_fixpoint,
    optimize,
)

print("first ten 3-sets in colex order:")
for k in range(1, 11):
    print(f"  rank {k:2d}: {colex_unrank(3, k).vertices}")

A, B = RSet.of(2, 4, 6), RSet.of(1, 5, 6)
print("\ncompare {2,4,6} vs {1,5,6}:", colex_compare(A, B).name)
print("rank of {2,3,4}:", colex_rank(RSet.of(2, 3, 4)))

C = colex_segment(3, 5)
print("\n5-edge segment:", [e.vertices for e in C.edges])
print("is left-compressed:", is_left_compressed(C))
print("complement inside [4+1]:", [e.vertices for e in complement_in_clique(C, 5).edges])

# Compress an arbitrary graph to a fixpoint: same m, canonical-ish shape.
G = UniformHypergraph(3, 6, [(2, 4, 6), (1, 3, 5), (3, 4, 6)])
F = left_compress_fixpoint(G)
print("\nbefore compression:", [e.vertices for e in G.edges])
print("after compression: ", [e.vertices for e in F.edges])
print("compressed passes the check:", is_left_compressed(F))

cfg = OptimizerConfig(restarts=6, seed=0)
print("value before:", optimize(G, cfg).value)
print("value after: ", optimize(F, cfg).value, "(never smaller)")
