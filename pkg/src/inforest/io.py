"""Graph text and JSON formats.

Text format::

    digraph <n>          (or "graph <n>" for an undirected edge list)
    <tail> <head> <weight>

Vertices are 1-based; weights are decimals or rationals like ``p/q``.
Lines starting with ``#`` and blank lines are ignored. The JSON form is
``{"n": int, "directed": bool, "arcs": [[tail, head, "weight"], ...]}``
with weights kept as strings so exact values survive the boundary.

Emission is canonical (arcs sorted by tail then head, input order
preserved among parallels) so parse-emit round trips are byte identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GraphFormatError
from .graph import MultiDigraph, Weight


@dataclass(frozen=True)
class ParsedGraph:
    """A parsed graph plus how it was declared.

    For undirected inputs ``graph`` is the doubled digraph and ``edges``
    holds the original 0-based edge list; for directed inputs ``edges`` is
    None.
    """

    graph: MultiDigraph
    undirected: bool
    edges: Optional[tuple[tuple[int, int, Weight], ...]]


def parse_weight(token: str) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"bad weight {token!r}") from exc
    return value


def format_weight(value: Weight) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(Fraction(value))


def _parse_vertex(token: str, n: int, line_no: int) -> int:
    try:
        vertex = int(token)
    except ValueError as exc:
        raise GraphFormatError(f"line {line_no}: bad vertex {token!r}") from exc
    return vertex - 1  # range checks happen at graph construction


def parse_graph_text(text: str, force_undirected: bool = False) -> ParsedGraph:
    header = None
    n = 0
    entries: list[tuple[int, int, Fraction]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or tokens[0] not in ("digraph", "graph"):
                raise GraphFormatError(
                    f"line {line_no}: expected 'digraph <n>' or 'graph <n>'"
                )
            header = tokens[0]
            try:
                n = int(tokens[1])
            except ValueError as exc:
                raise GraphFormatError(f"line {line_no}: bad vertex count {tokens[1]!r}") from exc
            continue
        if len(tokens) != 3:
            raise GraphFormatError(f"line {line_no}: expected '<tail> <head> <weight>'")
        entries.append(
            (
                _parse_vertex(tokens[0], n, line_no),
                _parse_vertex(tokens[1], n, line_no),
                parse_weight(tokens[2]),
            )
        )
    if header is None:
        raise GraphFormatError("empty input: missing 'digraph <n>' or 'graph <n>' header")
    undirected = header == "graph" or force_undirected
    if undirected:
        return ParsedGraph(
            graph=MultiDigraph.from_undirected(n, entries),
            undirected=True,
            edges=tuple(entries),
        )
    return ParsedGraph(graph=MultiDigraph(n, entries), undirected=False, edges=None)


def parse_graph_json(text: str, force_undirected: bool = False) -> ParsedGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"bad JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload or "arcs" not in payload:
        raise GraphFormatError('JSON graphs need "n" and "arcs" keys')
    n = payload["n"]
    if not isinstance(n, int):
        raise GraphFormatError('"n" must be an integer')
    directed = payload.get("directed", True)
    entries = []
    for item in payload["arcs"]:
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise GraphFormatError(f"bad arc entry {item!r}")
        tail, head, weight = item
        if not isinstance(tail, int) or not isinstance(head, int):
            raise GraphFormatError(f"bad arc endpoints in {item!r}")
        entries.append((tail - 1, head - 1, parse_weight(str(weight))))
    undirected = (not directed) or force_undirected
    if undirected:
        return ParsedGraph(
            graph=MultiDigraph.from_undirected(n, entries),
            undirected=True,
            edges=tuple(entries),
        )
    return ParsedGraph(graph=MultiDigraph(n, entries), undirected=False, edges=None)


def parse_graph(text: str, force_undirected: bool = False) -> ParsedGraph:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text, force_undirected)
    return parse_graph_text(text, force_undirected)


def format_graph(graph: MultiDigraph) -> str:
    """Canonical text form of a digraph (1-based, sorted arcs)."""
    order = sorted(range(len(graph.arcs)), key=lambda i: (graph.arcs[i].tail, graph.arcs[i].head))
    lines = [f"digraph {graph.n}"]
    for index in order:
        arc = graph.arcs[index]
        lines.append(f"{arc.tail + 1} {arc.head + 1} {format_weight(arc.weight)}")
    return "\n".join(lines) + "\n"
