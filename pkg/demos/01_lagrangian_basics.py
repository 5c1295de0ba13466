"""Evaluating and maximizing the edge-monomial polynomial of a hypergraph.

Walks through the core objects: build small r-graphs, evaluate the
objective at chosen weightings, inspect links (partial derivatives), and
run the simplex maximizer.
"""

from fractions import Fraction

from hlag import (
    OptimizerConfig,
    UniformHypergraph,
    baum_eagon_step,
    clique_lambda_exact,
    colex_segment,
    complete_graph,
    eval_lambda,
    eval_lambda_exact,
    kkt_residual,
    optimize,
    vertex_link,
)

# A single 2-edge: the objective is x1*x2, maximized at (1/2, 1/2).
edge = UniformHypergraph(2, 2, [(1, 2)])
print("single edge at (0.5, 0.5):", eval_lambda(edge, [0.5, 0.5]))

res = optimize(edge, OptimizerConfig(restarts=4, seed=0))
print("optimizer:", res.value, res.weighting.weights)

# The complete 3-graph on [4]: value C(4,3)/4^3 = 1/16 at the uniform point.
K43 = complete_graph(4, 3)
print("\ncomplete graph on 4 vertices, rank 3")
print("uniform value:", eval_lambda(K43, [0.25] * 4))
print("exact certificate:", clique_lambda_exact(4, 3))
print("exact uniform evaluation:", eval_lambda_exact(K43, [Fraction(1, 4)] * 4))

# Links are partial derivatives; at an interior optimum they all equal
# r * lambda, and kkt_residual measures the worst deviation.
print("link of vertex 1 at uniform:", vertex_link(K43, [0.25] * 4, 1))
print("stationarity residual at uniform:", kkt_residual(K43, [0.25] * 4))

# The multiplicative ascent step never decreases the objective.
G = colex_segment(3, 5)
x = [0.3, 0.3, 0.2, 0.1, 0.1]
print("\nascending the 5-edge colex segment from", x)
for step in range(5):
    print(f"  step {step}: value = {eval_lambda(G, x):.12f}")
    x = baum_eagon_step(G, x)

best = optimize(G, OptimizerConfig(restarts=8, seed=0))
print("optimum:", best.value, "support:", sorted(best.support))
print("(vertex 5 is dropped: the first four edges already attain 1/16)")
