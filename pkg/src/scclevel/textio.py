"""Edge-list input and partition output text formats.

Input: ``n m`` followed by ``m`` pairs ``u v`` of 1-based vertex ids,
separated by any whitespace. Output: the component count on the first line,
then one line per component listing its 1-based members, each followed by a
single space.
"""

from __future__ import annotations

from typing import IO

from .graph import DirectedGraph
from .solver import SccPartition


class ParseError(ValueError):
    """Base class for malformed edge-list input."""


class MalformedHeader(ParseError):
    pass


class EdgeCountMismatch(ParseError):
    pass


class EndpointOutOfRange(ParseError):
    pass


class TokenNotInteger(ParseError):
    pass


def _read(source: str | IO[str]) -> str:
    return source if isinstance(source, str) else source.read()


def parse_edge_list(source: str | IO[str]) -> DirectedGraph:
    tokens = _read(source).split()
    if len(tokens) < 2:
        raise MalformedHeader(f"expected 'n m' header, found {len(tokens)} token(s)")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise MalformedHeader(f"header {tokens[0]!r} {tokens[1]!r} is not two integers") from None
    if n < 0 or m < 0:
        raise MalformedHeader(f"header counts must be non-negative, got {n} {m}")

    body = tokens[2:]
    if len(body) != 2 * m:
        raise EdgeCountMismatch(
            f"header declares {m} edge(s), body holds {len(body) / 2:g}"
        )
    g = DirectedGraph(n)
    adjacency = g.adjacency
    for k in range(m):
        a, b = body[2 * k], body[2 * k + 1]
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise TokenNotInteger(f"edge {k + 1}: {a!r} {b!r} is not two integers") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise EndpointOutOfRange(f"edge {k + 1}: ({u}, {v}) outside [1, {n}]")
        adjacency[u - 1].append(v - 1)
    g.edge_count = m
    return g


def format_edge_list(g: DirectedGraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_partition(p: SccPartition) -> str:
    out = [f"{p.component_count}\n"]
    for block in p.members:
        out.append("".join(f"{v + 1} " for v in block))
        out.append("\n")
    return "".join(out)
