"""Plain-text edge-list format shared by all tools.

Layout: optional comment lines starting with '#', one header line "r n m",
then m lines of r space-separated strictly increasing vertex labels.
Serialization is bit-exact: edges in colex order, single spaces, trailing
newline.
"""

from __future__ import annotations

from typing import IO, Iterable

from .hypergraph import UniformHypergraph


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_edge_list(source: str | bytes | IO) -> UniformHypergraph:
    """Parse an edge-list document into a hypergraph.

    Validates the header, edge arity, vertex range, sortedness, uniqueness,
    and declared edge count; every error reports its line number.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")

    header = None
    edges = []
    seen = set()
    expected = None
    r = n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3:
                raise EdgeListError(f"header must be 'r n m', got {line!r}", lineno)
            try:
                r, n, expected = (int(f) for f in fields)
            except ValueError:
                raise EdgeListError(f"non-integer header field in {line!r}", lineno) from None
            if r < 1 or n < r or expected < 0:
                raise EdgeListError(f"header out of range: r={r} n={n} m={expected}", lineno)
            header = (r, n, expected)
            continue
        if len(edges) >= expected:
            raise EdgeListError(f"more than the declared m={expected} edges", lineno)
        if len(fields) != r:
            raise EdgeListError(f"edge has {len(fields)} vertices, expected r={r}", lineno)
        try:
            verts = tuple(int(f) for f in fields)
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {line!r}", lineno) from None
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise EdgeListError(f"vertices must be strictly increasing, got {line!r}", lineno)
        if verts[0] < 1 or verts[-1] > n:
            raise EdgeListError(f"vertex out of range [1, {n}] in {line!r}", lineno)
        if verts in seen:
            raise EdgeListError(f"duplicate edge {line!r}", lineno)
        seen.add(verts)
        edges.append(verts)

    if header is None:
        raise EdgeListError("missing header line 'r n m'")
    if len(edges) != expected:
        raise EdgeListError(f"declared m={expected} edges but found {len(edges)}")
    return UniformHypergraph(r, n, edges)


def serialize_edge_list(G: UniformHypergraph, comments: Iterable[str] = ()) -> str:
    """Render G in the canonical text form (bit-exact, colex edge order)."""
    out = []
    for c in comments:
        out.append(f"# {c}" if c else "#")
    out.append(f"{G.r} {G.n} {G.m}")
    for e in G.edges:
        out.append(" ".join(str(v) for v in e.vertices))
    return "\n".join(out) + "\n"
