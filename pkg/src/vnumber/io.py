"""Text formats: 1-based edge lists and graph6."""

from __future__ import annotations

from typing import Iterator

from .errors import GraphParseError
from .graph import Graph

GRAPH6_MAX_N = 62


def parse_edgelist(text: str) -> Graph:
    """First line ``n``; then one ``u v`` pair per line (1-based). ``#`` starts a comment.

    Without the ``n`` line the vertex count is the largest label used.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphParseError("empty input")
    n = None
    if len(rows[0][1]) == 1:
        lineno, (token,) = rows.pop(0)
        try:
            n = int(token)
        except ValueError:
            raise GraphParseError(f"bad vertex count {token!r}", line=lineno) from None
        if n < 1:
            raise GraphParseError("vertex count must be >= 1", line=lineno)
    pairs = []
    for lineno, fields in rows:
        if len(fields) != 2:
            raise GraphParseError(f"expected 'u v', got {' '.join(fields)!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {' '.join(fields)!r}", line=lineno) from None
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=lineno)
        pairs.append((lineno, u, v))
    if n is None:
        n = max(max(u, v) for _, u, v in pairs)
    edges = []
    seen = set()
    for lineno, u, v in pairs:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex out of range 1..{n} in '{u} {v}'", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {{{key[0]},{key[1]}}}", line=lineno)
        seen.add(key)
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record (n <= 62). Bits run over x(0,1), x(0,2), x(1,2), x(0,3), ..."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise GraphParseError("empty graph6 record", offset=0)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"invalid graph6 byte {byte!r}", offset=pos)
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise GraphParseError(f"graph6 with n > {GRAPH6_MAX_N} not supported", offset=0)
    if n < 1:
        raise GraphParseError("graph6 with zero vertices", offset=0)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise GraphParseError(f"expected {need} data bytes for n={n}, got {len(body)}", offset=1 + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def iter_graph6(data: bytes | str) -> Iterator[Graph]:
    if isinstance(data, str):
        data = data.encode("ascii")
    for line in data.splitlines():
        if line.strip():
            yield parse_graph6(line)


def parse_graph(data: bytes | str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(data.decode() if isinstance(data, bytes) else data)
    if fmt == "graph6":
        return parse_graph6(data)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 writer supports n <= {GRAPH6_MAX_N}")
    out = [g.n + 63]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            k += 1
            if k % 6 == 0:
                out.append(acc + 63)
                acc = 0
    if k % 6:
        out.append((acc << (6 - k % 6)) + 63)
    return bytes(out).decode("ascii")
