"""graph6 and plain edge-list I/O."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph_core import Graph

HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")


def from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ParseError("empty graph6 string", line)
    data = s.encode("ascii", errors="replace")
    if any(not 63 <= b <= 126 for b in data):
        raise ParseError(f"invalid graph6 character in {s!r}", line)
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError(f"truncated size field in {s!r}", line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", line)
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("non-zero padding bits", line)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for no, raw in enumerate(lines, start=1):
        if raw.strip():
            yield from_graph6(raw, line=no)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def from_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-indexed).  ``#`` starts a comment."""
    edges = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw!r}", no) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {raw!r}", no)
        edges.append((u, v))
    size = max((max(e) for e in edges), default=-1) + 1
    if n is not None:
        if n < size:
            raise ParseError(f"n={n} too small for vertex {size - 1}")
        size = n
    try:
        return Graph(max(size, 1), edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
