"""Enumeration of left-compressed graphs and margin-reporting verification.

Left-compressed r-graphs on [nmax] are exactly the downsets of the
coordinatewise dominance order on r-subsets of [nmax]; enumerating
downsets of a given size replaces isomorphism-reduction entirely, since
some extremal graph with m edges is always left-compressed.  The verify_*
entry points optimize the relevant graphs and record every inequality as
an explicit (lhs, rhs, margin, pass) check.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping

import numpy as np

from .families import addresultplus_case, addresult_graph, case2_printed_graph, lemmaaddplus_graph
from .hypergraph import (
    RSet,
    UniformHypergraph,
    colex_segment,
    colex_unrank,
    complete_graph,
    is_left_compressed,
    with_universe,
)
from .lagrangian import (
    OptimizerConfig,
    OptResult,
    clique_lambda_exact,
    eval_lambda,
    optimize,
    pair_link,
)

HEADLINE_TOL = 1e-9     # absolute, for lam(G) <= lam(colex segment) claims
INNER_TOL = 1e-6        # optimum-dependent inner inequalities and equalities
IDENTITY_TOL = 1e-8     # closed-form difference identity residual
RANGE_TOL = 1e-7        # value-plateau equality checks

THEOREM_NAMES = (
    "talbot-colex-range",
    "addresult",
    "addresult-plus",
    "lemmaadd-plus",
    "clique-weight-bound",
    "tang-delta2",
    "pz-clique",
)


class EnumerationBudgetError(RuntimeError):
    """The enumeration exceeded the configured budget; results would be
    incomplete, so the caller gets an error instead of a truncated stream."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"enumeration exceeded the budget of {budget} graphs")


@dataclass(frozen=True)
class Check:
    label: str
    lhs: float
    rhs: float
    margin: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _check_ge(label: str, lhs: float, rhs: float, tol: float) -> Check:
    margin = lhs - rhs
    return Check(label, float(lhs), float(rhs), float(margin), tol, margin >= -tol)


def _check_le(label: str, lhs: float, rhs: float, tol: float) -> Check:
    margin = rhs - lhs
    return Check(label, float(lhs), float(rhs), float(margin), tol, margin >= -tol)


def _check_eq(label: str, lhs: float, rhs: float, tol: float) -> Check:
    margin = -abs(lhs - rhs)
    return Check(label, float(lhs), float(rhs), float(margin), tol, margin >= -tol)


def _check_bool(label: str, holds: bool) -> Check:
    lhs = 1.0 if holds else 0.0
    return Check(label, lhs, 1.0, lhs - 1.0, 0.0, holds)


@dataclass(frozen=True)
class VerificationReport:
    """Named checks with explicit margins, plus the two headline values."""

    name: str
    params: dict
    lambda_G: float
    lambda_Crm: float
    checks: tuple[Check, ...]
    converged_all: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "lambda_G": self.lambda_G,
            "lambda_Crm": self.lambda_Crm,
            "checks": [c.to_dict() for c in self.checks],
            "converged_all": self.converged_all,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def checks_to_csv(self) -> str:
        rows = ["label,lhs,rhs,margin,tolerance,pass"]
        for c in self.checks:
            rows.append(f"{c.label},{c.lhs!r},{c.rhs!r},{c.margin!r},{c.tolerance!r},{c.passed}")
        return "\n".join(rows) + "\n"

    def to_text(self) -> str:
        width = max((len(c.label) for c in self.checks), default=5)
        lines = [
            f"verification: {self.name}",
            f"params: {dict(self.params)}",
            f"lambda_G = {self.lambda_G!r}   lambda_Crm = {self.lambda_Crm!r}",
            f"all optimizations converged: {self.converged_all}",
            f"{'check'.ljust(width)}  {'lhs':>24} {'rhs':>24} {'margin':>13}  verdict",
        ]
        for c in self.checks:
            lines.append(
                f"{c.label.ljust(width)}  {c.lhs:>24.17g} {c.rhs:>24.17g} {c.margin:>13.3e}  "
                + ("pass" if c.passed else "FAIL")
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# downset enumeration


def minimal_universe(r: int, m: int) -> int:
    """Smallest t with m <= C(t, r)."""
    t = r
    while comb(t, r) < m:
        t += 1
    return t


@dataclass(frozen=True)
class EnumerationCursor:
    """A colex-prefix partition of the downset search tree.

    ``prefix`` fixes the include/exclude decision for the first len(prefix)
    r-sets in colex order; enumerating from a cursor yields exactly the
    downsets consistent with those decisions, so the cursors produced by
    :func:`partition_cursors` split the full enumeration into disjoint
    shards for parallel consumption.
    """

    r: int
    m: int
    nmax: int
    prefix: tuple[bool, ...] = ()


def _colex_universe(r: int, nmax: int) -> list[RSet]:
    return [colex_unrank(r, k) for k in range(1, comb(nmax, r) + 1)]


def _cover_indices(universe: list[RSet]) -> list[list[int]]:
    """Indices of each r-set's lower covers (single-unit coordinate drops)."""
    rank_of = {S.vertices: idx for idx, S in enumerate(universe)}
    covers = []
    for S in universe:
        vs = S.vertices
        cov = []
        for p, v in enumerate(vs):
            if v > 1 and (v - 1) not in S:
                T = list(vs)
                T[p] = v - 1
                cov.append(rank_of[tuple(T)])
        covers.append(cov)
    return covers


def enumerate_left_compressed(
    r: int,
    m: int,
    nmax: int,
    cursor: EnumerationCursor | None = None,
    limit: int | None = None,
) -> Iterator[UniformHypergraph]:
    """Yield every left-compressed r-graph with m edges inside [nmax].

    Graphs are produced in depth-first include-before-exclude order over
    the colex-sorted ground set, so the colex segment itself comes first.
    A ``limit`` raises :class:`EnumerationBudgetError` on the (limit+1)-th
    graph rather than truncating silently.
    """
    if m < 0:
        raise ValueError(f"edge count must be >= 0, got {m}")
    if not 1 <= r <= nmax:
        raise ValueError(f"need 1 <= r <= nmax, got r={r}, nmax={nmax}")
    if nmax > 64:
        raise ValueError(f"nmax={nmax} exceeds the universe cap of 64")
    N = comb(nmax, r)
    if m > N:
        return
    universe = _colex_universe(r, nmax)
    covers = _cover_indices(universe)

    chosen = [False] * N
    taken = 0
    idx = 0
    if cursor is not None:
        for included in cursor.prefix:
            if idx >= N:
                return
            if included:
                if taken == m or not all(chosen[c] for c in covers[idx]):
                    return
                chosen[idx] = True
                taken += 1
            idx += 1
    base_idx = idx

    yielded = 0

    def build() -> UniformHypergraph:
        return UniformHypergraph(r, nmax, (universe[i] for i, c in enumerate(chosen) if c))

    path: list[tuple[int, bool]] = []
    descend = True
    while True:
        if descend:
            while True:
                if taken == m:
                    yielded += 1
                    if limit is not None and yielded > limit:
                        raise EnumerationBudgetError(limit)
                    yield build()
                    descend = False
                    break
                if idx == N or taken + (N - idx) < m:
                    descend = False
                    break
                if all(chosen[c] for c in covers[idx]):
                    chosen[idx] = True
                    taken += 1
                    path.append((idx, True))
                else:
                    path.append((idx, False))
                idx += 1
        else:
            flipped = False
            while path:
                j, included = path.pop()
                if included:
                    chosen[j] = False
                    taken -= 1
                    path.append((j, False))
                    idx = j + 1
                    descend = True
                    flipped = True
                    break
            if not flipped:
                return


def partition_cursors(r: int, m: int, nmax: int, depth: int) -> list[EnumerationCursor]:
    """Cursors over all consistent decision prefixes of the given depth.

    Their enumerations are pairwise disjoint and jointly cover the plain
    enumeration exactly once.
    """
    N = comb(nmax, r)
    depth = min(depth, N)
    universe = _colex_universe(r, nmax)
    covers = _cover_indices(universe)
    out = []
    for bits in itertools.product((True, False), repeat=depth):
        chosen = [False] * N
        taken = 0
        ok = True
        for idx, included in enumerate(bits):
            if included:
                if taken == m or not all(chosen[c] for c in covers[idx]):
                    ok = False
                    break
                chosen[idx] = True
                taken += 1
        if ok:
            out.append(EnumerationCursor(r, m, nmax, bits))
    return out


def random_left_compressed_graph(
    rng: np.random.Generator,
    r: int,
    nmax: int,
    m: int,
    base: UniformHypergraph | None = None,
) -> UniformHypergraph:
    """A uniformly-grown random downset with m edges inside [nmax].

    Starts from ``base`` (which must itself be left-compressed) and adds
    addable r-sets one at a time, chosen uniformly among the minimal
    elements of the complement.
    """
    universe = _colex_universe(r, nmax)
    covers = _cover_indices(universe)
    N = len(universe)
    if m > N:
        raise ValueError(f"m={m} exceeds C({nmax},{r})={N}")
    chosen = [False] * N
    count = 0
    if base is not None:
        index_of = {S.vertices: i for i, S in enumerate(universe)}
        for e in base.edges:
            chosen[index_of[e.vertices]] = True
            count += 1
    if count > m:
        raise ValueError(f"base graph already has {count} > m = {m} edges")
    while count < m:
        addable = [i for i in range(N) if not chosen[i] and all(chosen[c] for c in covers[i])]
        chosen[addable[int(rng.integers(len(addable)))]] = True
        count += 1
    return UniformHypergraph(r, nmax, (universe[i] for i, c in enumerate(chosen) if c))


# ---------------------------------------------------------------------------
# conjecture verification


def verify_conjecture(
    r: int,
    m: int,
    cfg: OptimizerConfig | None = None,
    nmax: int | None = None,
    budget: int = 200_000,
    tolerance: float = RANGE_TOL,
) -> VerificationReport:
    """Check that the colex segment maximizes lam among m-edge r-graphs.

    The search space is the left-compressed graphs inside [nmax].  For
    r = 3, nmax defaults to the minimal t with m <= C(t, 3), which is a
    valid vertex bound for 3-graph maximizers; no such bound is available
    for r >= 4, so there nmax must be supplied explicitly.
    """
    cfg = cfg or OptimizerConfig()
    if nmax is None:
        if r != 3:
            raise ValueError("no default vertex bound for r != 3; pass nmax explicitly")
        nmax = minimal_universe(r, m)
    if m > comb(nmax, r):
        raise ValueError(f"m={m} exceeds C({nmax},{r}); enlarge nmax")
    segment = colex_segment(r, m)
    seg_opt = optimize(segment, cfg)

    best = -math.inf
    count = 0
    converged_all = seg_opt.converged
    for G in enumerate_left_compressed(r, m, nmax, limit=budget):
        res = optimize(G, cfg)
        converged_all = converged_all and res.converged
        count += 1
        best = max(best, res.value)

    checks = (
        _check_le(
            f"max lam over {count} left-compressed graphs <= lam(colex segment)",
            best,
            seg_opt.value,
            tolerance,
        ),
        _check_eq("colex segment attains the maximum", seg_opt.value, best, tolerance),
    )
    return VerificationReport(
        name="conjecture",
        params={"r": r, "m": m, "nmax": nmax, "graphs": count},
        lambda_G=best,
        lambda_Crm=seg_opt.value,
        checks=checks,
        converged_all=converged_all,
    )


# ---------------------------------------------------------------------------
# theorem verification


def _tail_product(x: np.ndarray, lo: int, hi: int) -> float:
    p = 1.0
    for v in range(lo, hi + 1):
        p *= x[v - 1]
    return p


def _sortedness_check(x: np.ndarray, n: int) -> Check:
    worst = min((x[k] - x[k + 1] for k in range(n - 1)), default=0.0)
    return _check_ge("weights sorted: min consecutive gap >= 0", worst, 0.0, 1e-9)


def _group_gap(x: np.ndarray, lo: int, hi: int) -> float:
    vals = [x[v - 1] for v in range(lo, hi + 1)]
    return (max(vals) - min(vals)) if vals else 0.0


def _segment_on(t: int, r: int, m: int) -> UniformHypergraph:
    return with_universe(colex_segment(r, m), t)


def _verify_addresult(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    t, r, a, i = (int(params[k]) for k in ("t", "r", "a", "i"))
    G = addresult_graph(t, r, a, i)
    C = _segment_on(t, r, G.m)
    optG = optimize(G, cfg)
    optC = optimize(C, cfg)
    x = np.array(optG.weighting.weights)

    lamG_at = optG.value
    lamC_at = eval_lambda(C, x)
    u2, v1, v2 = t - r - i + 1, t - r + 1, t - r + 2
    identity_rhs = i * (x[u2 - 1] * x[v1 - 1] - x[0] * x[v2 - 1]) * _tail_product(x, t - r + 3, t)

    checks = (
        _check_le("lam(G) <= lam(colex segment)", optG.value, optC.value, HEADLINE_TOL),
        _sortedness_check(x, t),
        _check_ge(
            f"4*pairlink(1,{u2}) >= pairlink({v1},{v2})",
            4.0 * pair_link(G, x, 1, u2),
            pair_link(G, x, v1, v2),
            INNER_TOL,
        ),
        _check_ge(
            f"x_{v1} - x_{v2} >= x_1 - x_{u2}",
            x[v1 - 1] - x[v2 - 1],
            x[0] - x[u2 - 1],
            INNER_TOL,
        ),
        _check_eq(
            f"equality group x_1 .. x_{t - r - a + i + 1}",
            _group_gap(x, 1, t - r - a + i + 1),
            0.0,
            INNER_TOL,
        ),
        _check_eq(
            f"equality group x_{u2} .. x_{t - r}",
            _group_gap(x, u2, t - r),
            0.0,
            INNER_TOL,
        ),
        _check_eq(
            "difference identity lam(C,x) - lam(G,x) = i*(gap product)",
            lamC_at - lamG_at,
            identity_rhs,
            IDENTITY_TOL,
        ),
    )
    return VerificationReport(
        name="addresult",
        params={"t": t, "r": r, "a": a, "i": i, "m": G.m},
        lambda_G=optG.value,
        lambda_Crm=optC.value,
        checks=checks,
        converged_all=optG.converged and optC.converged,
    )


def _lemma10_inner_checks(G: UniformHypergraph, x: np.ndarray, t: int, r: int, a: int, prefix: str = "") -> list[Check]:
    w1, w2 = t - r - a + 3, t - r
    z1, z2 = t - r + 1, t - r + 3
    return [
        _check_ge(
            f"{prefix}4*pairlink({w1},{w2}) >= pairlink({z1},{z2})",
            4.0 * pair_link(G, x, w1, w2),
            pair_link(G, x, z1, z2),
            INNER_TOL,
        ),
        _check_ge(
            f"{prefix}x_{z1} - x_{z2} >= x_{w1} - x_{w2}",
            x[z1 - 1] - x[z2 - 1],
            x[w1 - 1] - x[w2 - 1],
            INNER_TOL,
        ),
    ]


def _verify_lemmaadd_plus(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    t, r, a = (int(params[k]) for k in ("t", "r", "a"))
    G = lemmaaddplus_graph(t, r, a)
    C = _segment_on(t, r, G.m)
    optG = optimize(G, cfg)
    optC = optimize(C, cfg)
    x = np.array(optG.weighting.weights)
    checks = [
        _check_le("lam(G) <= lam(colex segment)", optG.value, optC.value, HEADLINE_TOL),
        _sortedness_check(x, t),
    ]
    checks += _lemma10_inner_checks(G, x, t, r, a)
    return VerificationReport(
        name="lemmaadd-plus",
        params={"t": t, "r": r, "a": a, "m": G.m},
        lambda_G=optG.value,
        lambda_Crm=optC.value,
        checks=tuple(checks),
        converged_all=optG.converged and optC.converged,
    )


def _verify_addresult_plus(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    t, r, a = (int(params[k]) for k in ("t", "r", "a"))
    m = comb(t, r) - a
    C = _segment_on(t, r, m)
    optC = optimize(C, cfg)
    checks: list[Check] = []
    converged_all = optC.converged
    best = -math.inf
    for case in (1, 2, 3):
        G = addresultplus_case(t, r, a, case)
        optG = optimize(G, cfg)
        converged_all = converged_all and optG.converged
        best = max(best, optG.value)
        checks.append(
            _check_le(f"case {case}: lam(G) <= lam(colex segment)", optG.value, optC.value, HEADLINE_TOL)
        )
        checks.append(_check_bool(f"case {case}: graph is left-compressed", is_left_compressed(G)))
        checks.append(
            _check_eq(f"case {case}: edge count is C(t,r) - a", float(G.m), float(m), 0.0)
        )
        if case == 3:
            x = np.array(optG.weighting.weights)
            checks += _lemma10_inner_checks(G, x, t, r, a, prefix="case 3: ")
    printed = case2_printed_graph(t, r, a)
    checks.append(
        _check_bool("printed case-2 variant is rejected by is_left_compressed", not is_left_compressed(printed))
    )
    return VerificationReport(
        name="addresult-plus",
        params={"t": t, "r": r, "a": a, "m": m},
        lambda_G=best,
        lambda_Crm=optC.value,
        checks=tuple(checks),
        converged_all=converged_all,
    )


def _verify_talbot_colex_range(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    r, t = int(params["r"]), int(params["t"])
    m_min = int(params.get("m_min", comb(t - 1, r)))
    m_max = int(params.get("m_max", comb(t - 1, r) + comb(t - 2, r - 1)))
    reference = float(clique_lambda_exact(t - 1, r))
    checks = []
    converged_all = True
    worst_val, worst_dev = reference, -1.0
    for m in range(m_min, m_max + 1):
        res = optimize(colex_segment(r, m), cfg)
        converged_all = converged_all and res.converged
        dev = abs(res.value - reference)
        if dev > worst_dev:
            worst_dev, worst_val = dev, res.value
        checks.append(_check_eq(f"lam(colex segment m={m}) == lam(clique on {t - 1})", res.value, reference, RANGE_TOL))
    return VerificationReport(
        name="talbot-colex-range",
        params={"r": r, "t": t, "m_min": m_min, "m_max": m_max},
        lambda_G=worst_val,
        lambda_Crm=reference,
        checks=tuple(checks),
        converged_all=converged_all,
    )


def _verify_clique_weight_bound(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    t, r = int(params["t"]), int(params["r"])
    samples = int(params.get("samples", 100))
    if not 1 <= r <= t - 1:
        raise ValueError(f"need r <= t-1, got r={r}, t={t}")
    rng = np.random.default_rng([cfg.seed, t, r])
    base = complete_graph(t - 1, r)
    base_on_t = with_universe(base, t)
    lo, hi = base.m, comb(t, r)
    worst_sum = math.inf   # (x_{t-1} + x_t) - x_1
    worst_sorted = math.inf  # x_{t-1} - x_t
    worst_lambda = math.inf
    converged_all = True
    for _ in range(samples):
        m = int(rng.integers(lo, hi + 1))
        G = random_left_compressed_graph(rng, r, t, m, base=base_on_t)
        res = optimize(G, cfg)
        converged_all = converged_all and res.converged
        x = res.weighting.weights
        worst_sum = min(worst_sum, x[t - 2] + x[t - 1] - x[0])
        worst_sorted = min(worst_sorted, x[t - 2] - x[t - 1])
        worst_lambda = min(worst_lambda, res.value)
    checks = (
        _check_ge(f"x_{t - 1} + x_{t} >= x_1 (worst of {samples})", worst_sum, 0.0, INNER_TOL),
        _check_ge(f"x_{t - 1} >= x_{t} (worst of {samples})", worst_sorted, 0.0, INNER_TOL),
    )
    return VerificationReport(
        name="clique-weight-bound",
        params={"t": t, "r": r, "samples": samples},
        lambda_G=worst_lambda,
        lambda_Crm=float(clique_lambda_exact(t - 1, r)),
        checks=checks,
        converged_all=converged_all,
    )


def _verify_tang_delta2(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    """Spot check: left-compressed graphs on [t] within symmetric difference
    2 of the colex segment never beat it."""
    t, r = int(params["t"]), int(params["r"])
    p = int(params.get("p", 2))
    m = comb(t, r) - p
    segment = _segment_on(t, r, m)
    optC = optimize(segment, cfg)
    seg_masks = set(segment.edge_masks)
    checks = []
    converged_all = optC.converged
    best = -math.inf
    count = 0
    for G in enumerate_left_compressed(r, m, t, limit=100_000):
        delta = len(seg_masks.symmetric_difference(G.edge_masks))
        if delta == 0 or delta > 2:
            continue
        res = optimize(G, cfg)
        converged_all = converged_all and res.converged
        best = max(best, res.value)
        count += 1
        checks.append(
            _check_le(f"graph {count} (delta=2): lam(G) <= lam(colex segment)", res.value, optC.value, HEADLINE_TOL)
        )
    if not checks:
        checks.append(_check_bool("no graphs within symmetric difference 2 exist", True))
        best = optC.value
    return VerificationReport(
        name="tang-delta2",
        params={"t": t, "r": r, "p": p, "m": m, "graphs": count},
        lambda_G=best,
        lambda_Crm=optC.value,
        checks=tuple(checks),
        converged_all=converged_all,
    )


def _verify_pz_clique(params: Mapping, cfg: OptimizerConfig) -> VerificationReport:
    """Spot check: 3-graphs with m edges containing a clique on t-1 vertices
    have the clique's objective value, for m in the plateau range."""
    t = int(params["t"])
    samples = int(params.get("samples", 10))
    rng = np.random.default_rng([cfg.seed, t, 3])
    lo, hi = comb(t - 1, 3), comb(t - 1, 3) + comb(t - 2, 2)
    reference = float(clique_lambda_exact(t - 1, 3))
    base = with_universe(complete_graph(t - 1, 3), t)
    extras = [e for e in itertools.combinations(range(1, t + 1), 3) if t in e]
    checks = []
    converged_all = True
    worst = reference
    for s in range(samples):
        m = int(rng.integers(lo, hi + 1))
        picks = rng.permutation(len(extras))[: m - base.m]
        G = UniformHypergraph(3, t, list(base.edges) + [extras[int(i)] for i in picks])
        res = optimize(G, cfg)
        converged_all = converged_all and res.converged
        if abs(res.value - reference) > abs(worst - reference):
            worst = res.value
        checks.append(_check_eq(f"sample {s} (m={m}): lam(G) == lam(clique on {t - 1})", res.value, reference, RANGE_TOL))
    return VerificationReport(
        name="pz-clique",
        params={"t": t, "samples": samples},
        lambda_G=worst,
        lambda_Crm=reference,
        checks=tuple(checks),
        converged_all=converged_all,
    )


_VERIFIERS = {
    "talbot-colex-range": _verify_talbot_colex_range,
    "addresult": _verify_addresult,
    "addresult-plus": _verify_addresult_plus,
    "lemmaadd-plus": _verify_lemmaadd_plus,
    "clique-weight-bound": _verify_clique_weight_bound,
    "tang-delta2": _verify_tang_delta2,
    "pz-clique": _verify_pz_clique,
}


def verify_theorem(name: str, params: Mapping, cfg: OptimizerConfig | None = None) -> VerificationReport:
    """Run one named verification and return its margin report.

    Known names: talbot-colex-range (value plateau of colex segments),
    addresult (shifted-colex family inner inequalities), addresult-plus
    (the three symmetric-difference-4 cases), lemmaadd-plus (the
    double-defect family), clique-weight-bound (top-weight bounds on
    random clique-containing graphs), plus the spot checks tang-delta2 and
    pz-clique.
    """
    if name not in _VERIFIERS:
        raise ValueError(f"unknown verification {name!r}; known: {', '.join(sorted(_VERIFIERS))}")
    return _VERIFIERS[name](params, cfg or OptimizerConfig())
