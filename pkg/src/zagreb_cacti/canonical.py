"""Canonical labelling for small graphs.

Exhaustive search over labellings, restricted to those compatible with an
equitable ordered partition (iterated degree refinement) and pruned by
twin vertices.  Exact, with no external dependency, and fast enough for the
n <= 10 graphs this package enumerates.
"""

from __future__ import annotations

from .formats import to_graph6
from .graph_core import Graph

DEFAULT_LIMIT = 10

Partition = list[list[int]]


def _refine(adj: tuple[frozenset[int], ...], cells: Partition) -> Partition:
    """Coarsest equitable refinement of an ordered partition.

    Split cells are ordered by neighbour count into the splitter, so the
    result depends only on the isomorphism type of (graph, partition).
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            splitter = set(cells[si])
            out: Partition = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(len(adj[v] & splitter), []).append(v)
                if len(groups) > 1:
                    changed = True
                out.extend(groups[c] for c in sorted(groups))
            cells = out
            if changed:
                break
    return cells


def _certificate(g: Graph, order: list[int]) -> str:
    pos = {v: i for i, v in enumerate(order)}
    return to_graph6(Graph(g.n, ((pos[u], pos[v]) for u, v in g.edges)))


def canonical_labelling(g: Graph, limit: int = DEFAULT_LIMIT) -> tuple[str, list[int]]:
    """Return ``(canonical graph6, order)`` where ``order[i]`` is the vertex placed at ``i``."""
    if g.n > limit:
        raise ValueError(f"canonical form limited to n <= {limit}, got n={g.n}")
    if g.n == 0:
        return to_graph6(g), []
    adj = tuple(g.neighbors(v) for v in range(g.n))
    best: tuple[str, list[int]] | None = None

    def search(cells: Partition) -> None:
        nonlocal best
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best is None or cert < best[0]:
                best = (cert, order)
            return
        tried: list[int] = []
        for v in cells[target]:
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, split))

    search(_refine(adj, [list(range(g.n))]))
    assert best is not None
    return best


def canonical_form(g: Graph, limit: int = DEFAULT_LIMIT) -> bytes:
    """Isomorphism-invariant byte string (graph6 of the canonical relabelling)."""
    return canonical_labelling(g, limit)[0].encode("ascii")


def canonical_graph(g: Graph, limit: int = DEFAULT_LIMIT) -> Graph:
    _, order = canonical_labelling(g, limit)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)
