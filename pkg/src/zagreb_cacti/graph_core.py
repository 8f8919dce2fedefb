"""Simple graphs, cactus validation and the structural queries built on them.

Vertices are the dense integers ``0..n-1``.  Graph values are immutable;
every edit (see :meth:`Graph.edit`) returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class NotACactusError(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        n = len(adj)
        return cls(n, ((u, v) for u in range(n) for v in adj[u] if u < v))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees, reverse=True))

    def edit(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Graph":
        """Return a copy with ``remove`` deleted and then ``add`` inserted."""
        es = set(self.edges)
        for u, v in remove:
            e = _norm(u, v)
            if e not in es:
                raise KeyError(f"edge {e} not present")
            es.remove(e)
        for u, v in add:
            e = _norm(u, v)
            if e in es:
                raise ValueError(f"edge {e} already present")
            es.add(e)
        return Graph(self.n, es)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def bfs(self, start: int, banned_edges: frozenset[Edge] = frozenset(),
            banned_vertices: Iterable[int] = ()) -> set[int]:
        seen = {start}
        blocked = set(banned_vertices)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w in seen or w in blocked or _norm(u, w) in banned_edges:
                    continue
                seen.add(w)
                queue.append(w)
        return seen

    def components(self) -> list[set[int]]:
        left = set(range(self.n))
        comps = []
        while left:
            comp = self.bfs(min(left))
            comps.append(comp)
            left -= comp
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.bfs(0)) == self.n

    def distances_from(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


# --------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]
    # bipartite block/cut-vertex tree as (block index, cut vertex) pairs
    block_cut_tree: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def end_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if len(b & self.cut_vertices) <= 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via Hopcroft-Tarjan (iterative DFS)."""
    if not g.is_connected():
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    if n == 1:
        return BlockDecomposition((frozenset({0}),), (frozenset(),), frozenset(), ())

    disc = [-1] * n
    low = [0] * n
    edge_stack: list[Edge] = []
    comps: list[set[Edge]] = []
    timer = 0
    disc[0] = low[0] = timer
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, iter(sorted(g.neighbors(0))))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                edge_stack.append((u, w))
                stack.append((w, u, iter(sorted(g.neighbors(w)))))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp = set()
                while True:
                    e = edge_stack.pop()
                    comp.add(_norm(*e))
                    if e == (parent, u):
                        break
                comps.append(comp)

    comps.sort(key=lambda es: min(es))
    blocks = tuple(frozenset(v for e in es for v in e) for es in comps)
    count: dict[int, int] = {}
    for b in blocks:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)
    tree = tuple((i, v) for i, b in enumerate(blocks) for v in sorted(b & cuts))
    return BlockDecomposition(blocks, tuple(frozenset(es) for es in comps), cuts, tree)


@dataclass(frozen=True)
class CactusCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_cactus(g: Graph) -> CactusCheck:
    if g.n < 1:
        return CactusCheck(False, "empty graph")
    if not g.is_connected():
        comps = g.components()
        return CactusCheck(False, f"disconnected: {len(comps)} components")
    bd = block_decomposition(g)
    for b, es in zip(bd.blocks, bd.block_edges):
        if len(es) > 1 and len(es) != len(b):
            return CactusCheck(
                False, f"block {sorted(b)} has {len(es)} edges on {len(b)} vertices; "
                       "neither an edge nor a cycle")
    return CactusCheck(True)


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def _cycle_order(g: Graph, block: frozenset[int]) -> tuple[int, ...]:
    start = min(block)
    order = [start]
    prev, cur = -1, min(w for w in g.neighbors(start) if w in block)
    while cur != start:
        order.append(cur)
        nxt = [w for w in g.neighbors(cur) if w in block and w != order[-2]]
        prev, cur = cur, nxt[0]
    return tuple(order)


@dataclass(frozen=True)
class DensePath:
    anchor: int
    spine: tuple[int, ...]  # u_1 .. u_p, spine[0] == anchor
    leaves: tuple[int, ...]  # pendant vertices hanging at spine[-1]
    anchor_on_cycle: bool

    @property
    def length(self) -> int:
        return len(self.spine)

    @property
    def r(self) -> int:
        return len(self.leaves)

    def vertices(self) -> tuple[int, ...]:
        return self.spine + self.leaves


class CactusGraph:
    """A graph validated to be a cactus, with cached block/cycle structure."""

    def __init__(self, graph: Graph):
        check = is_cactus(graph)
        if not check:
            raise NotACactusError(check.reason)
        self.graph = graph

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "CactusGraph":
        return cls(Graph(n, edges))

    def __repr__(self) -> str:
        return f"CactusGraph(n={self.n}, k={self.k}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CactusGraph):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.graph.degrees

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def neighbors(self, v: int) -> frozenset[int]:
        return self.graph.neighbors(v)

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def degree_sequence(self) -> tuple[int, ...]:
        return self.graph.degree_sequence()

    @cached_property
    def k(self) -> int:
        return pendant_count(self.graph)

    @cached_property
    def blocks(self) -> BlockDecomposition:
        return block_decomposition(self.graph)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Vertex lists of the cycle blocks, each in cyclic order."""
        return tuple(_cycle_order(self.graph, b)
                     for b, es in zip(self.blocks.blocks, self.blocks.block_edges)
                     if len(es) > 1)

    @cached_property
    def cycles_at(self) -> tuple[tuple[int, ...], ...]:
        """Indices into :attr:`cycles` of the cycles through each vertex."""
        at: list[list[int]] = [[] for _ in range(self.n)]
        for i, cyc in enumerate(self.cycles):
            for v in cyc:
                at[v].append(i)
        return tuple(tuple(a) for a in at)

    @cached_property
    def cycle_edges(self) -> frozenset[Edge]:
        es = set()
        for cyc in self.cycles:
            for i, v in enumerate(cyc):
                es.add(_norm(v, cyc[i - 1]))
        return frozenset(es)

    def is_bridge(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v) and _norm(u, v) not in self.cycle_edges

    def side(self, u: int, x: int) -> frozenset[int]:
        """Vertices reachable from ``x`` once the bridge ``ux`` is cut."""
        if not self.is_bridge(u, x):
            raise ValueError(f"({u}, {x}) is not a bridge")
        return frozenset(self.graph.bfs(x, banned_edges=frozenset({_norm(u, x)})))

    def pendant_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 1]

    @cached_property
    def dense_paths(self) -> tuple[DensePath, ...]:
        return tuple(find_dense_paths(self))


def find_dense_paths(g: CactusGraph) -> list[DensePath]:
    """Maximal dense paths, one record per (spine, leaf bundle).

    Starting from each vertex ``w`` carrying pendant leaves, the spine is
    extended back through off-cycle vertices whose only non-leaf neighbour is
    the next spine vertex, then through degree-2 off-cycle vertices, and
    stops at the first vertex that lies on a cycle or has degree >= 3.  That
    vertex is the anchor; it must lie on at most one cycle.  Path graphs
    have no admissible anchor and yield nothing.
    """
    deg = g.degrees
    on_cycle = [bool(c) for c in g.cycles_at]
    found: dict[tuple[int, ...], DensePath] = {}
    for w in range(g.n):
        if deg[w] < 2:
            continue
        leaves = tuple(sorted(x for x in g.neighbors(w) if deg[x] == 1))
        if not leaves:
            continue
        spine = [w]
        inner = [x for x in g.neighbors(w) if deg[x] > 1]
        if not on_cycle[w] and len(inner) == 1:
            prev, cur = w, inner[0]
            while not on_cycle[cur] and deg[cur] == 2:
                spine.append(cur)
                nxt = [x for x in g.neighbors(cur) if x != prev][0]
                prev, cur = cur, nxt
            if deg[cur] == 1:
                continue  # the whole graph is a path
            spine.append(cur)
        spine.reverse()
        anchor = spine[0]
        if len(g.cycles_at[anchor]) > 1:
            continue
        dp = DensePath(anchor, tuple(spine), leaves, on_cycle[anchor])
        found[dp.spine] = dp
    return [found[s] for s in sorted(found)]


def bridge_path(g: CactusGraph, a: int, b: int) -> tuple[int, ...] | None:
    """Shortest ``a``-``b`` path, or None if it uses a cycle edge."""
    parent = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in sorted(g.neighbors(u)):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    for u, v in zip(path, path[1:]):
        if not g.is_bridge(u, v):
            return None
    return tuple(path)


def cycle_links(g: CactusGraph) -> list[tuple[int, int, tuple[int, ...]]]:
    """Paths joining exactly two cycles.

    Returns ``(i, j, path)`` for each pair of cycles whose connecting path
    meets no third cycle: either they share a vertex (``path`` is that single
    vertex, length 0) or they are joined by bridges whose interior avoids all
    cycles.
    """
    out = []
    cyc = g.cycles
    sets = [frozenset(c) for c in cyc]
    for i in range(len(cyc)):
        for j in range(i + 1, len(cyc)):
            shared = sets[i] & sets[j]
            if shared:
                out.append((i, j, (min(shared),)))
                continue
            path = _closest_path(g, sets[i], sets[j])
            if path is None:
                continue
            interior = path[1:-1]
            if any(g.cycles_at[v] for v in interior):
                continue
            if all(g.is_bridge(u, v) for u, v in zip(path, path[1:])):
                out.append((i, j, path))
    return out


def _closest_path(g: CactusGraph, src: frozenset[int], dst: frozenset[int]) -> tuple[int, ...] | None:
    parent: dict[int, int] = {s: s for s in src}
    queue = deque(sorted(src))
    hit = None
    while queue:
        u = queue.popleft()
        if u in dst:
            hit = u
            break
        for w in sorted(g.neighbors(u)):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if hit is None:
        return None
    path = [hit]
    while parent[path[-1]] != path[-1]:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def pendant_trees(g: CactusGraph) -> list[tuple[int, frozenset[int]]]:
    """Trees hanging off a single cycle vertex, as ``(root_on_cycle, tree_vertices)``.

    ``tree_vertices`` excludes the cycle vertex itself.
    """
    on_cycle = {v for v in range(g.n) if g.cycles_at[v]}
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in on_cycle or s in seen:
            continue
        comp = g.graph.bfs(s, banned_vertices=on_cycle)
        seen |= comp
        attach = {(u, w) for u in comp for w in g.neighbors(u) if w in on_cycle}
        if len(attach) == 1:
            (_, root), = attach
            out.append((root, frozenset(comp)))
    return out
