"""Near-extremal r-graph families on [t] whose complement misses a few edges.

All families are defined by their complement inside the complete graph on
[t].  Tuple patterns such as "j (t-r+2) ... t" expand as {j} followed by
the consecutive run {t-r+2, ..., t}; runs may be empty (for small r the
trailing run degenerates to {t} or vanishes).  Every complement edge
contains vertex t, so each family contains the complete graph on [t-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .hypergraph import RSet, UniformHypergraph, complement_in_clique, complete_graph


@dataclass(frozen=True)
class FamilyParams:
    """Parameters shared by the constructors: universe t, rank r, complement
    size a (so m = C(t, r) - a), colex-gap index i, and case number."""

    t: int
    r: int
    a: int
    i: int | None = None
    case: int | None = None


def _run(lo: int, hi: int) -> tuple[int, ...]:
    """The consecutive run {lo, ..., hi}; empty when lo > hi."""
    return tuple(range(lo, hi + 1))


def _shifted_colex_family(t: int, r: int, a: int, i: int) -> list[RSet]:
    """Complement tuples: a-i edges {j, t-r+2, ..., t} for the top j's, plus
    i edges {t-r-j+1, t-r+1, t-r+3, ..., t} for j = 1..i.

    No range validation: the strict parameter window is enforced by the
    public constructors, while the case dispatcher below reuses the raw
    pattern outside that window.
    """
    tail_full = _run(t - r + 2, t)
    tail_gap = _run(t - r + 3, t)
    comp = [RSet.of(j, *tail_full) for j in range(t - r + 2 - a + i, t - r + 2)]
    comp += [RSet.of(t - r - j + 1, t - r + 1, *tail_gap) for j in range(1, i + 1)]
    return comp


def addresult_graph(t: int, r: int, a: int, i: int) -> UniformHypergraph:
    """The family whose colex-minimum non-edge is {t-r-i+1, t-r+1, t-r+3..t}.

    m = C(t, r) - a, with 2i + 9 <= a <= t - r + 1.  The complement has
    a - i edges of the form {j, t-r+2, ..., t} and i edges of the form
    {t-r-j+1, t-r+1, t-r+3, ..., t}; the result is left-compressed,
    contains the complete graph on [t-1], and differs from the colex
    segment with the same m in exactly 2i edges.
    """
    if min(t, r, a, i) < 1:
        raise ValueError("t, r, a, i must be positive")
    if r >= t:
        raise ValueError(f"need r < t, got r={r}, t={t}")
    if i > t - r:
        raise ValueError(f"gap index i={i} too large for t={t}, r={r}")
    if not 2 * i + 9 <= a <= t - r + 1:
        raise ValueError(f"need 2i+9 <= a <= t-r+1, got a={a}, i={i}, t={t}, r={r}")
    comp = _shifted_colex_family(t, r, a, i)
    assert len(set(comp)) == a
    return complement_in_clique(UniformHypergraph(r, t, comp), t)


def lemmaaddplus_graph(t: int, r: int, a: int) -> UniformHypergraph:
    """The family missing a-2 tuples {j, t-r+2..t} plus the two tuples
    {t-r, t-r+1, t-r+3..t} and {t-r, t-r+1, t-r+2, t-r+4..t}.

    Needs r >= 4 (the second extra tuple uses a fourth low coordinate) and
    12 <= a <= t - r + 1.  The result is left-compressed, contains the
    complete graph on [t-1], and differs from the colex segment in exactly
    4 edges.
    """
    if r < 4:
        raise ValueError(f"need r >= 4, got r={r}")
    if not 12 <= a <= t - r + 1:
        raise ValueError(f"need 12 <= a <= t-r+1, got a={a}, t={t}, r={r}")
    tail_full = _run(t - r + 2, t)
    comp = [RSet.of(j, *tail_full) for j in range(t - r - a + 4, t - r + 2)]
    comp.append(RSet.of(t - r, t - r + 1, *_run(t - r + 3, t)))
    comp.append(RSet.of(t - r, t - r + 1, t - r + 2, *_run(t - r + 4, t)))
    assert len(set(comp)) == a
    return complement_in_clique(UniformHypergraph(r, t, comp), t)


def case2_printed_graph(t: int, r: int, a: int) -> UniformHypergraph:
    """Case 2 with the literal third complement tuple
    {t-r-1, t-r+1, t-r+2, t-r+4..t}.

    This variant is NOT left-compressed: the dominating tuple
    {t-r, t-r+1, t-r+2, t-r+4..t} is missing from its complement.  Kept
    constructible for study; the dispatcher returns the compressed variant.
    """
    _validate_case_params(t, r, a)
    tail_full = _run(t - r + 2, t)
    comp = [RSet.of(j, *tail_full) for j in range(t - r - a + 4, t - r + 2)]
    comp.append(RSet.of(t - r, t - r + 1, *_run(t - r + 3, t)))
    comp.append(RSet.of(t - r - 1, t - r + 1, t - r + 2, *_run(t - r + 4, t)))
    assert len(set(comp)) == a
    return complement_in_clique(UniformHypergraph(r, t, comp), t)


def _validate_case_params(t: int, r: int, a: int):
    if r < 4:
        raise ValueError(f"need r >= 4, got r={r}")
    if not 12 <= a <= t - r + 1:
        raise ValueError(f"need 12 <= a <= t-r+1, got a={a}, t={t}, r={r}")


def addresultplus_case(t: int, r: int, a: int, case: int, printed_variant: bool = False) -> UniformHypergraph:
    """One of the three left-compressed edge sets within symmetric
    difference 4 of the colex segment (complement size a, r >= 4).

    Case 1 is the gap-index-1 family, case 2 the gap-index-2 family (the
    literal printed variant of its third tuple is not left-compressed and
    is only returned under ``printed_variant=True``), case 3 the family of
    :func:`lemmaaddplus_graph`.
    """
    _validate_case_params(t, r, a)
    if case not in (1, 2, 3):
        raise ValueError(f"case must be 1, 2, or 3, got {case}")
    if printed_variant and case != 2:
        raise ValueError("printed_variant only applies to case 2")
    if case == 1:
        comp = _shifted_colex_family(t, r, a, 1)
        return complement_in_clique(UniformHypergraph(r, t, comp), t)
    if case == 2:
        if printed_variant:
            return case2_printed_graph(t, r, a)
        comp = _shifted_colex_family(t, r, a, 2)
        return complement_in_clique(UniformHypergraph(r, t, comp), t)
    return lemmaaddplus_graph(t, r, a)


def family_edge_count(t: int, r: int, a: int) -> int:
    """m = C(t, r) - a for any of the families above."""
    return comb(t, r) - a
