"""Evaluation and maximization of the edge-monomial polynomial of a hypergraph.

For an r-graph G and a weight vector x, the objective is

    lam(G, x) = sum over edges e of prod_{v in e} x_v,

maximized over the standard simplex (nonnegative weights summing to 1).
The maximizer uses the multiplicative growth transform

    x_i <- x_i * lam(E_i, x) / (r * lam(G, x)),

which is monotone for homogeneous polynomials with nonnegative
coefficients, combined with multistart, exhaustive support enumeration at
small n, and Newton refinement of the equal-link stationarity system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .hypergraph import UniformHypergraph

Rational = Fraction


class ZeroLambdaError(ValueError):
    """The current weighting gives lam(G, x) = 0, so the multiplicative
    ascent step is undefined; restart from a different point."""


@dataclass(frozen=True)
class Weighting:
    """A point of the standard simplex: nonnegative weights summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self):
        ws = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if any(w < 0.0 for w in ws):
            raise ValueError("weights must be nonnegative")
        if abs(math.fsum(ws) - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {math.fsum(ws)!r}")

    @classmethod
    def uniform(cls, n: int) -> "Weighting":
        return cls(tuple([1.0 / n] * n))

    @classmethod
    def normalized(cls, values: Iterable[float]) -> "Weighting":
        """Clip tiny negatives to 0 and rescale so the sum is exactly 1-ish."""
        arr = np.asarray(list(values), dtype=float)
        arr = np.maximum(arr, 0.0)
        total = arr.sum()
        if total <= 0.0:
            raise ValueError("cannot normalize an all-zero weight vector")
        arr = arr / total
        return cls(tuple(arr.tolist()))

    def __array__(self, dtype=None, copy=None):
        return np.array(self.weights, dtype=dtype or float)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for :func:`optimize`.

    restarts counts ascent starts (the first is always the uniform
    weighting, the rest are Dirichlet-random interior points whose
    generators derive from (seed, restart index)).  Below
    ``exhaustive_support_threshold`` vertices, ascent additionally runs
    from the uniform point of every admissible support subset, which makes
    the search a de facto global oracle at desk scale.
    """

    restarts: int = 64
    max_iterations: int = 100_000
    value_tolerance: float = 1e-13
    kkt_tolerance: float = 1e-8
    support_prune_epsilon: float = 1e-9
    seed: int = 0
    exhaustive_support_threshold: int = 10

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        for name in ("value_tolerance", "kkt_tolerance", "support_prune_epsilon"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be > 0")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative 64-bit integer")
        if not 0 <= self.exhaustive_support_threshold <= 16:
            raise ValueError("exhaustive_support_threshold must be in [0, 16]")


@dataclass(frozen=True)
class OptResult:
    """Outcome of a simplex maximization.

    ``value`` always equals ``eval_lambda(G, weighting)`` for the returned
    weighting; ``support`` is the set of vertices with positive weight
    (empty for edgeless graphs); ``converged`` records whether the
    stationarity residual met the configured tolerance.
    """

    value: float
    weighting: Weighting
    support: frozenset[int]
    kkt_residual: float
    iterations: int
    converged: bool


# ---------------------------------------------------------------------------
# evaluation and links


def _as_weights(x, n: int) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < n:
        raise ValueError(f"weighting must have length >= n = {n}")
    return arr


def _sorted_product(factors: list[float]) -> float:
    factors.sort()
    p = 1.0
    for f in factors:
        p *= f
    return p


def eval_lambda(G: UniformHypergraph, x) -> float:
    """lam(G, x): the sum of edge monomials at x.

    Monomial factors are multiplied in sorted value order and the edge sums
    are accumulated with exact (correctly rounded) summation, so relabeling
    the vertices of G and x together leaves the result bit-identical.
    """
    xs = _as_weights(x, G.n)
    return math.fsum(_sorted_product([xs[v - 1] for v in e.vertices]) for e in G.edges)


def eval_lambda_exact(G: UniformHypergraph, x: Sequence[Fraction]) -> Fraction:
    """lam(G, x) in exact rational arithmetic (certificate evaluation)."""
    if len(x) < G.n:
        raise ValueError(f"weighting must have length >= n = {G.n}")
    total = Fraction(0)
    for e in G.edges:
        p = Fraction(1)
        for v in e.vertices:
            p *= Fraction(x[v - 1])
        total += p
    return total


def vertex_link(G: UniformHypergraph, x, i: int) -> float:
    """lam(E_i, x): edges through i with i deleted; the partial derivative
    of lam(G, x) with respect to x_i.  Empty products count as 1."""
    if not 1 <= i <= G.n:
        raise ValueError(f"vertex {i} out of range [1, {G.n}]")
    xs = _as_weights(x, G.n)
    return math.fsum(
        _sorted_product([xs[v - 1] for v in e.vertices if v != i])
        for e in G.edges
        if i in e
    )


def pair_link(G: UniformHypergraph, x, i: int, j: int) -> float:
    """lam(E_ij, x): edges through both i and j, with both deleted."""
    if i == j:
        raise ValueError("pair_link needs two distinct vertices")
    for v in (i, j):
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} out of range [1, {G.n}]")
    xs = _as_weights(x, G.n)
    return math.fsum(
        _sorted_product([xs[v - 1] for v in e.vertices if v != i and v != j])
        for e in G.edges
        if i in e and j in e
    )


def strict_link(G: UniformHypergraph, x, i: int, j: int) -> float:
    """lam(E_{i \\ j}, x) with swap-aware membership.

    Only edges e with i but not j whose (i -> j) swap is a NON-edge
    contribute, each as the product over e minus i.  Under this reading a
    graph is left-compressed exactly when E_{j \\ i} is empty for all i < j.
    """
    if i == j:
        raise ValueError("strict_link needs two distinct vertices")
    for v in (i, j):
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} out of range [1, {G.n}]")
    xs = _as_weights(x, G.n)
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    total = []
    for e in G.edges:
        mask = e.mask
        if not mask & ib or mask & jb:
            continue
        if G.has_edge_mask((mask ^ ib) | jb):
            continue
        total.append(_sorted_product([xs[v - 1] for v in e.vertices if v != i]))
    return math.fsum(total)


def baum_eagon_step(G: UniformHypergraph, x) -> Weighting:
    """One multiplicative-ascent step; lam never decreases along steps."""
    xs = _as_weights(x, G.n)
    E = G.index_array
    lam = float(_batch_eval(E, xs[None, : G.n])[0])
    if lam <= 0.0:
        raise ZeroLambdaError("lam(G, x) = 0: multiplicative step undefined")
    links = _batch_links(E, xs[None, : G.n], G.n)[0]
    new = xs[: G.n] * links / (G.r * lam)
    return Weighting.normalized(new)


def kkt_residual(G: UniformHypergraph, x) -> float:
    """Max over the support of |lam(E_i, x) - r * lam(G, x)|.

    Zero at every stationary interior-of-support point; the equal-link
    condition is necessary for a minimal-support optimal weighting.
    """
    xs = _as_weights(x, G.n)
    lam = eval_lambda(G, xs)
    worst = 0.0
    for i in range(1, G.n + 1):
        if xs[i - 1] > 0.0:
            worst = max(worst, abs(vertex_link(G, xs, i) - G.r * lam))
    return worst


def clique_lambda_exact(t: int, r: int) -> Fraction:
    """Exact objective value of the complete r-graph on [t]: C(t, r) / t**r,
    attained by the uniform weighting."""
    if not 1 <= r <= t:
        raise ValueError(f"need 1 <= r <= t, got r={r}, t={t}")
    return Fraction(comb(t, r), t**r)


# ---------------------------------------------------------------------------
# vectorized internals (rows of X are independent weight vectors)


def _batch_eval(E: np.ndarray, X: np.ndarray) -> np.ndarray:
    if E.shape[0] == 0:
        return np.zeros(X.shape[0])
    return X[:, E].prod(axis=2).sum(axis=1)


def _exclusive_products(P: np.ndarray) -> np.ndarray:
    """For P of shape (..., r): products over all positions except each one."""
    r = P.shape[-1]
    pref = np.empty_like(P)
    pref[..., 0] = 1.0
    if r > 1:
        np.cumprod(P[..., :-1], axis=-1, out=pref[..., 1:])
    suf = np.empty_like(P)
    suf[..., -1] = 1.0
    if r > 1:
        suf[..., :-1] = np.cumprod(P[..., :0:-1], axis=-1)[..., ::-1]
    return pref * suf


def _batch_links(E: np.ndarray, X: np.ndarray, n: int) -> np.ndarray:
    K = X.shape[0]
    m, r = E.shape
    if m == 0:
        return np.zeros((K, n))
    excl = _exclusive_products(X[:, E])
    idx = np.repeat(np.arange(K) * n, m * r) + np.tile(E.reshape(-1), K)
    return np.bincount(idx, weights=excl.reshape(-1), minlength=K * n).reshape(K, n)


def _ascend(E: np.ndarray, r: int, X: np.ndarray, max_iter: int, tol: float):
    """Iterate the growth transform rowwise until per-row gain < tol.

    Rows whose value would decrease from float round-off keep their old
    point, so the per-row trajectory is nondecreasing.  Returns the final
    points, their values, and per-row iteration counts.
    """
    X = np.array(X, dtype=float)
    K, n = X.shape
    lam = _batch_eval(E, X)
    iters = np.zeros(K, dtype=np.int64)
    act = np.flatnonzero(lam > 0.0)
    steps = 0
    while act.size and steps < max_iter:
        Xa = X[act]
        la = lam[act]
        links = _batch_links(E, Xa, n)
        Xn = Xa * links / (r * la)[:, None]
        Xn /= Xn.sum(axis=1)[:, None]
        ln = _batch_eval(E, Xn)
        gain = ln - la
        keep = gain > 0.0
        rows = act[keep]
        X[rows] = Xn[keep]
        lam[rows] = ln[keep]
        iters[act] += 1
        act = act[gain > tol]
        steps += 1
    return X, lam, iters


def _support_links_pairs(Es: np.ndarray, r: int, y: np.ndarray, s: int):
    """Link vector, pair-link Jacobian, and value on a support subproblem."""
    P = y[Es]
    lam = float(P.prod(axis=1).sum())
    excl = _exclusive_products(P)
    links = np.bincount(Es.reshape(-1), weights=excl.reshape(-1), minlength=s)
    A = np.zeros((s, s))
    for p in range(r):
        for q in range(p + 1, r):
            cols = [c for c in range(r) if c != p and c != q]
            pr = P[:, cols].prod(axis=1) if cols else np.ones(P.shape[0])
            np.add.at(A, (Es[:, p], Es[:, q]), pr)
            np.add.at(A, (Es[:, q], Es[:, p]), pr)
    return links, A, lam


def _internal_kkt(E: np.ndarray, r: int, x: np.ndarray) -> float:
    lam = float(_batch_eval(E, x[None])[0])
    links = _batch_links(E, x[None], x.shape[0])[0]
    sup = x > 0.0
    if not sup.any():
        return 0.0
    return float(np.abs(links[sup] - r * lam).max())


def _newton_refine(E: np.ndarray, r: int, x: np.ndarray, rounds: int = 40) -> np.ndarray:
    """Polish x by Newton iteration on {equal links on the support, sum = 1}.

    The Jacobian of the link vector is the pair-link matrix (zero diagonal,
    since each link is independent of its own weight).  The result is
    accepted only if it does not lose value and does not worsen the
    stationarity residual; otherwise the input is returned unchanged.
    """
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    sup = np.flatnonzero(x > 0.0)
    s = sup.size
    if s == 0 or E.shape[0] == 0:
        return x
    inside = np.isin(E, sup).all(axis=1)
    if not inside.any():
        return x
    remap = np.full(n, -1, dtype=np.int64)
    remap[sup] = np.arange(s)
    Es = remap[E[inside]]
    y = x[sup] / x[sup].sum()
    mu = None
    for _ in range(rounds):
        links, A, lam = _support_links_pairs(Es, r, y, s)
        if mu is None:
            mu = r * lam
        F = np.concatenate([links - mu, [y.sum() - 1.0]])
        if np.abs(F).max() < 1e-15:
            break
        J = np.zeros((s + 1, s + 1))
        J[:s, :s] = A
        J[:s, s] = -1.0
        J[s, :s] = 1.0
        try:
            d = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return x
        y_new = y + d[:s]
        if not np.isfinite(y_new).all() or (y_new < 1e-14).any():
            return x  # support change or blow-up: leave polishing to the caller
        y, mu = y_new, mu + d[s]
    y = y / y.sum()
    out = np.zeros(n)
    out[sup] = y
    val_in = float(_batch_eval(E, x[None])[0])
    val_out = float(_batch_eval(E, out[None])[0])
    if val_out > val_in or (val_out >= val_in - 1e-13 and _internal_kkt(E, r, out) <= _internal_kkt(E, r, x)):
        return out
    return x


def _candidate_supports(G: UniformHypergraph) -> list[int]:
    """Bitmasks of support subsets that can host a minimal-support optimum.

    Necessary conditions used for pruning: every support vertex lies in an
    edge induced inside the support, and every support pair lies in some
    edge of G (pair coverage; a transfer along an uncovered pair is linear
    in the objective, so one endpoint can always be zeroed for free).
    """
    n = G.n
    masks = np.asarray(G.edge_masks, dtype=np.int64)
    S = np.arange(1, 1 << n, dtype=np.int64)
    induced = (S[:, None] & masks[None, :]) == masks[None, :]
    ok = np.ones(S.size, dtype=bool)
    for v in range(n):
        vb = 1 << v
        has = (S & vb) != 0
        through_v = (masks & vb) != 0
        covered = induced[:, through_v].any(axis=1) if through_v.any() else np.zeros(S.size, bool)
        ok &= ~has | covered
    for u in range(n):
        ub = 1 << u
        for v in range(u + 1, n):
            vb = 1 << v
            if not (((masks & ub) != 0) & ((masks & vb) != 0)).any():
                ok &= ~(((S & ub) != 0) & ((S & vb) != 0))
    return [int(s) for s in S[ok]]


def _descending_candidate(E: np.ndarray, x: np.ndarray) -> np.ndarray:
    """The weight multiset reassigned to vertices in descending order.

    For left-compressed graphs this rearrangement never loses value, and it
    canonicalizes ties; for arbitrary graphs the caller keeps it only when
    it does not lose value.
    """
    return np.sort(x)[::-1].copy()


def _polish_row(E: np.ndarray, r: int, x: np.ndarray, cfg: OptimizerConfig):
    """Candidate points derived from one ascent endpoint.

    Applies epsilon pruning, a short re-ascent, and Newton refinement, then
    walks a boundary-drop ladder: while the stationarity residual is unmet,
    zero the smallest positive weight and refine again.  This resolves
    plateau cases where a vertex's marginal value vanishes exactly at the
    boundary and plain ascent stalls at a tiny interior weight.  Every
    candidate is returned normalized; the caller keeps the best by value.
    """
    used = 0

    def refine(y: np.ndarray):
        nonlocal used
        y = np.maximum(y, 0.0)
        if y.sum() <= 0.0:
            return None
        y = y / y.sum()
        pruned = y.copy()
        pruned[pruned < cfg.support_prune_epsilon] = 0.0
        if pruned.sum() > 0.0:
            y = pruned / pruned.sum()
        y, _, it = _ascend(E, r, y[None], min(cfg.max_iterations, 5000), cfg.value_tolerance)
        used += int(it[0])
        return _newton_refine(E, r, y[0])

    out = []

    def add(y: np.ndarray):
        if y is None:
            return None
        y = np.maximum(y, 0.0)
        total = y.sum()
        if total <= 0.0:
            return None
        y = y / total
        out.append(y)
        out.append(_descending_candidate(E, y))
        return y

    base = add(np.asarray(x, dtype=float))
    if base is None:
        return out, used
    cur = add(refine(base))
    if cur is None:
        return out, used
    cur_val = float(_batch_eval(E, cur[None])[0])
    for _ in range(min(cur.shape[0] - 1, 8)):
        if _internal_kkt(E, r, cur) <= cfg.kkt_tolerance:
            break
        sup = np.flatnonzero(cur > 0.0)
        if sup.size <= 1:
            break
        dropped = cur.copy()
        dropped[sup[np.argmin(cur[sup])]] = 0.0
        nxt = add(refine(dropped))
        if nxt is None:
            break
        nxt_val = float(_batch_eval(E, nxt[None])[0])
        if nxt_val < cur_val - 1e-7:
            break  # clearly lost value; deeper drops only lose more
        cur, cur_val = nxt, nxt_val
    return out, used


def optimize(G: UniformHypergraph, cfg: OptimizerConfig | None = None) -> OptResult:
    """Maximize lam(G, x) over the simplex.

    Multistart growth-transform ascent (uniform start plus Dirichlet-random
    interior starts), support pruning, Newton refinement, and, below the
    exhaustive-support threshold, ascent from every admissible support
    subset.  Deterministic for a fixed seed: per-restart randomness derives
    from (seed, restart index) and ties break toward the earliest start.
    """
    cfg = cfg or OptimizerConfig()
    n, r = G.n, G.r
    if G.m == 0:
        return OptResult(0.0, Weighting.uniform(n), frozenset(), 0.0, 0, True)
    E = G.index_array

    starts = [np.full(n, 1.0 / n)]
    for k in range(1, cfg.restarts):
        rng = np.random.default_rng([cfg.seed, k])
        starts.append(rng.dirichlet(np.ones(n)))
    if n <= cfg.exhaustive_support_threshold:
        for smask in _candidate_supports(G):
            row = np.zeros(n)
            for v in range(n):
                if smask >> v & 1:
                    row[v] = 1.0
            starts.append(row / row.sum())
    X0 = np.vstack(starts)

    X, lam, iters = _ascend(E, r, X0, cfg.max_iterations, cfg.value_tolerance)

    order = np.argsort(-lam, kind="stable")
    top = order[: min(8, order.size)]

    best_x, best_val, best_iters = None, -1.0, 0
    for row in top:
        candidates, row_iters = _polish_row(E, r, X[row], cfg)
        row_iters += int(iters[row])
        for c in candidates:
            val = float(_batch_eval(E, c[None])[0])
            if val > best_val:
                best_x, best_val, best_iters = c, val, row_iters
    assert best_x is not None

    desc = _descending_candidate(E, best_x)
    desc_val = float(_batch_eval(E, desc[None])[0])
    if desc_val >= best_val:
        best_x, best_val = desc, desc_val

    final = np.maximum(best_x, 0.0)
    final[final < cfg.support_prune_epsilon] = 0.0
    if final.sum() <= 0.0 or float(_batch_eval(E, (final / final.sum())[None])[0]) < best_val - cfg.value_tolerance:
        final = best_x
    final = final / final.sum()

    weighting = Weighting.normalized(final)
    value = eval_lambda(G, weighting)
    residual = kkt_residual(G, weighting)
    support = frozenset(i + 1 for i in range(n) if weighting.weights[i] > 0.0)
    return OptResult(value, weighting, support, residual, best_iters, residual <= cfg.kkt_tolerance)


def minimize_support(G: UniformHypergraph, result: OptResult, cfg: OptimizerConfig | None = None) -> OptResult:
    """Shrink the support of an optimization result without losing value.

    First, mass is transferred along support pairs not covered by any edge
    (the objective is linear there, so one endpoint zeroes for free); then
    vertices are greedily dropped whenever re-optimizing on the reduced
    support preserves the value within the configured tolerance.  The
    output satisfies pair coverage: every support pair lies in some edge.
    """
    cfg = cfg or OptimizerConfig()
    if G.m == 0:
        return result
    n, r = G.n, G.r
    E = G.index_array
    base = result.value
    x = np.array(result.weighting.weights, dtype=float)

    masks = G.edge_masks
    pair_covered = [[False] * (n + 1) for _ in range(n + 1)]
    for mask in masks:
        verts = [v for v in range(1, n + 1) if mask >> (v - 1) & 1]
        for a_i, u in enumerate(verts):
            for v in verts[a_i + 1:]:
                pair_covered[u][v] = True

    def _transfer_uncovered(y: np.ndarray) -> bool:
        """Zero one endpoint of every support pair not covered by an edge.

        The objective is linear along such a transfer, so moving all mass
        toward the endpoint with the larger link never loses value.
        """
        moved = False
        while True:
            sup = [v for v in range(1, n + 1) if y[v - 1] > 0.0]
            links = _batch_links(E, y[None], n)[0]
            hit = None
            for a_i, u in enumerate(sup):
                for v in sup[a_i + 1:]:
                    if not pair_covered[u][v]:
                        hit = (u, v)
                        break
                if hit:
                    break
            if hit is None:
                return moved
            u, v = hit
            if links[u - 1] >= links[v - 1]:
                y[u - 1] += y[v - 1]
                y[v - 1] = 0.0
            else:
                y[v - 1] += y[u - 1]
                y[u - 1] = 0.0
            moved = True

    def _repolish(y: np.ndarray) -> np.ndarray:
        y = np.maximum(y, 0.0)
        if y.sum() <= 0.0:
            return y
        y = y / y.sum()
        y = _ascend(E, r, y[None], min(cfg.max_iterations, 5000), cfg.value_tolerance)[0][0]
        return _newton_refine(E, r, y)

    _transfer_uncovered(x)
    x = _repolish(x)

    improved = True
    while improved:
        improved = False
        sup = np.flatnonzero(x > 0.0)
        if sup.size <= 1:
            break
        order = sorted(sup.tolist(), key=lambda v: (x[v], -v))
        for v in order:
            y = x.copy()
            y[v] = 0.0
            if y.sum() <= 0.0:
                continue
            y = y / y.sum()
            trial = _repolish(y)
            uniform_sup = np.where(y > 0.0, 1.0, 0.0)
            trial2 = _repolish(uniform_sup / uniform_sup.sum())
            for t in (trial, trial2):
                if t.sum() <= 0.0:
                    continue
                if float(_batch_eval(E, t[None])[0]) >= base - cfg.value_tolerance:
                    x = t
                    improved = True
                    break
            if improved:
                break

    # Canonicalize: adopt the descending rearrangement when it costs nothing,
    # then restore pair coverage; each transfer shrinks the support, so this
    # fixpoint loop runs at most n times.
    while True:
        desc = _descending_candidate(E, x)
        if float(_batch_eval(E, desc[None])[0]) >= float(_batch_eval(E, x[None])[0]):
            x = desc
        if not _transfer_uncovered(x):
            break
        x = _repolish(x)

    weighting = Weighting.normalized(x)
    value = eval_lambda(G, weighting)
    residual = kkt_residual(G, weighting)
    support = frozenset(i + 1 for i in range(n) if weighting.weights[i] > 0.0)
    return OptResult(value, weighting, support, residual, result.iterations, residual <= cfg.kkt_tolerance)
