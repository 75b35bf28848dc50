"""Text formats for digraphs, undirected graphs and colorings.

DIMACS-flavored: a `p` header, one body line per arc/edge, `c` comment
lines, 1-based vertex ids on disk (0-based in memory).

    p dgr <n> <m>        digraph header, then `a <u> <v>` arc lines
    p gr <n> <m>         graph header, then `e <u> <v>` edge lines

Coloring files use an `s dicoloring <n> <k>` header followed by exactly
n `c <v> <color>` assignment lines (both 1-based).  Writers emit sorted
body lines, so write(parse(x)) is the canonical form of x.
"""

from __future__ import annotations

from .graphs import Digraph, UndirectedGraph
from .oracles import Dicoloring


class FormatError(ValueError):
    """Malformed graph or coloring text."""


def _parse_header(lines: list[str], kind: str) -> tuple[int, int, list[str]]:
    body = []
    header: tuple[int, int] | None = None
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            if header is None or not line:
                continue
        if line.startswith("p "):
            if header is not None:
                raise FormatError(f"line {ln}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != kind:
                raise FormatError(f"line {ln}: expected 'p {kind} <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as exc:
                raise FormatError(f"line {ln}: bad header numbers") from exc
            continue
        if header is None:
            if line.startswith("c"):
                continue
            raise FormatError(f"line {ln}: body before header")
        body.append(line)
    if header is None:
        raise FormatError("missing 'p' header")
    return header[0], header[1], body


def sniff_kind(text: str) -> str:
    """'digraph' or 'graph', from the header token."""
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("p "):
            token = line.split()[1] if len(line.split()) > 1 else ""
            if token == "dgr":
                return "digraph"
            if token == "gr":
                return "graph"
            raise FormatError(f"unknown header kind {token!r}")
    raise FormatError("missing 'p' header")


def parse_digraph(text: str) -> Digraph:
    n, m, body = _parse_header(text.splitlines(), "dgr")
    arcs = []
    for line in body:
        parts = line.split()
        if parts[0] != "a" or len(parts) != 3:
            raise FormatError(f"bad arc line: {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise FormatError(f"bad arc line: {line!r}") from exc
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"arc ({u},{v}) out of range 1..{n}")
        if u == v:
            raise FormatError(f"self-loop at vertex {u}")
        arcs.append((u - 1, v - 1))
    if len(arcs) != m:
        raise FormatError(f"header declares {m} arcs, body has {len(arcs)}")
    return Digraph(n, arcs)


def write_digraph(D: Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    arcs = sorted(D.arcs())
    lines.append(f"p dgr {D.n} {len(arcs)}")
    lines.extend(f"a {u + 1} {v + 1}" for u, v in arcs)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> UndirectedGraph:
    n, m, body = _parse_header(text.splitlines(), "gr")
    edges = []
    for line in body:
        parts = line.split()
        if parts[0] != "e" or len(parts) != 3:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u},{v}) out of range 1..{n}")
        if u == v:
            raise FormatError(f"self-loop at vertex {u}")
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, body has {len(edges)}")
    return UndirectedGraph(n, edges)


def write_graph(G: UndirectedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    edges = sorted(G.edges())
    lines.append(f"p gr {G.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Dicoloring:
    header: tuple[int, int] | None = None
    assigned: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise FormatError(f"line {ln}: duplicate header")
            if len(parts) != 4 or parts[1] != "dicoloring":
                raise FormatError(f"line {ln}: expected 's dicoloring <n> <k>'")
            header = (int(parts[2]), int(parts[3]))
        elif parts[0] == "c":
            if header is None:
                raise FormatError(f"line {ln}: assignment before header")
            if len(parts) != 3:
                raise FormatError(f"line {ln}: expected 'c <v> <color>'")
            v, col = int(parts[1]), int(parts[2])
            if not (1 <= v <= header[0]) or col < 1:
                raise FormatError(f"line {ln}: assignment out of range")
            if v - 1 in assigned:
                raise FormatError(f"line {ln}: vertex {v} assigned twice")
            assigned[v - 1] = col - 1
        else:
            raise FormatError(f"line {ln}: unknown record {parts[0]!r}")
    if header is None:
        raise FormatError("missing 's dicoloring' header")
    n, k = header
    if len(assigned) != n:
        raise FormatError(f"coloring assigns {len(assigned)} of {n} vertices")
    col = Dicoloring.from_mapping(n, assigned)
    if col.num_colors != k:
        raise FormatError(f"header declares {k} colors, body uses {col.num_colors}")
    return col


def write_coloring(col: Dicoloring) -> str:
    lines = [f"s dicoloring {len(col.colors)} {col.num_colors}"]
    lines.extend(f"c {v + 1} {c + 1}" for v, c in enumerate(col.colors))
    return "\n".join(lines) + "\n"
