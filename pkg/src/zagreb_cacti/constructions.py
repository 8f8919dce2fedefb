"""Concrete cacti realising each theorem's extremal degree sequence."""

from __future__ import annotations

from typing import Sequence

from .bounds import InadmissibleError, Theorem, applies, bound_for
from .graph_core import CactusGraph, Edge, Graph


class _Builder:
    """Append-only edge list with fresh-vertex allocation."""

    def __init__(self, n: int = 1):
        self.n = n
        self.edges: list[Edge] = []

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def leaf(self, v: int, count: int = 1) -> None:
        for _ in range(count):
            self.edge(v, self.new())

    def path(self, v: int, length: int) -> int:
        """Hang a path of ``length`` edges at ``v``; return its far end."""
        for _ in range(length):
            w = self.new()
            self.edge(v, w)
            v = w
        return v

    def cycle(self, v: int, length: int) -> list[int]:
        """Glue a cycle of ``length`` at ``v``; return its vertices starting at ``v``."""
        ring = [v] + [self.new() for _ in range(length - 1)]
        for i in range(length):
            self.edge(ring[i], ring[(i + 1) % length])
        return ring

    def graph(self) -> CactusGraph:
        return CactusGraph(Graph(self.n, self.edges))


def cycle(n: int) -> CactusGraph:
    b = _Builder()
    b.cycle(0, n)
    return b.graph()


def tadpole(n: int) -> CactusGraph:
    """Cycle on ``n - 1`` vertices with one pendant edge."""
    b = _Builder()
    b.cycle(0, n - 1)
    b.leaf(0)
    return b.graph()


def spider(n: int, k: int) -> CactusGraph:
    """Tree with one centre of degree ``k`` and ``k`` legs over ``n - 1`` vertices."""
    b = _Builder()
    rest = n - 1
    for i in range(k):
        b.path(0, rest // k + (1 if i < rest % k else 0))
    return b.graph()


def star(k: int) -> CactusGraph:
    b = _Builder()
    b.leaf(0, k)
    return b.graph()


def double_star(a: int, c: int) -> CactusGraph:
    b = _Builder()
    w = b.new()
    b.edge(0, w)
    b.leaf(0, a)
    b.leaf(w, c)
    return b.graph()


def pendant_triangle(counts: Sequence[int]) -> CactusGraph:
    """Triangle whose three vertices carry ``counts`` pendant edges."""
    b = _Builder()
    ring = b.cycle(0, 3)
    for v, cnt in zip(ring, counts):
        b.leaf(v, cnt)
    return b.graph()


def _chain(b: _Builder, start: int, triangles: int) -> tuple[int, int]:
    """Chain of triangles, consecutive ones sharing a vertex.

    Returns a degree-2 vertex of the first triangle and a different degree-2
    vertex of the last one.
    """
    rings = []
    v = start
    for _ in range(triangles):
        rings.append(b.cycle(v, 3))
        v = rings[-1][2]
    return rings[0][1], rings[-1][2]


def triangle_chain(triangles: int) -> CactusGraph:
    b = _Builder()
    _chain(b, 0, triangles)
    return b.graph()


def bridged_triangle_chain(triangles: int) -> CactusGraph:
    """Two triangle chains joined by one bridge between degree-2 vertices."""
    left = (triangles + 1) // 2
    right = triangles - left
    b = _Builder()
    _, l_end = _chain(b, 0, left)
    r0 = b.new()
    r_start, _ = _chain(b, r0, right)
    b.edge(l_end, r_start)
    return b.graph()


def friendship_with_pendants(triangles: int, leaves: int, long_arm: bool = False,
                             square: bool = False) -> CactusGraph:
    """Hub lying on ``triangles`` triangles with ``leaves`` pendant edges.

    ``long_arm`` turns one pendant edge into a pendant path of length 2;
    ``square`` adds one 4-cycle through the hub.
    """
    b = _Builder()
    for _ in range(triangles):
        b.cycle(0, 3)
    if square:
        b.cycle(0, 4)
    if long_arm:
        b.path(0, 2)
        leaves -= 1
    b.leaf(0, leaves)
    return b.graph()


def realize_tree_degree_sequence(seq: Sequence[int]) -> CactusGraph:
    """Caterpillar realising a tree degree sequence.

    Non-leaf vertices go on a path in non-increasing degree order and leaves
    fill the remaining degree.  Vertex 0 has the largest degree.
    """
    degs = sorted((int(d) for d in seq), reverse=True)
    n = len(degs)
    if n < 2 or any(d < 1 for d in degs) or sum(degs) != 2 * (n - 1):
        raise ValueError(f"not a tree degree sequence: {list(seq)}")
    inner = [d for d in degs if d > 1]
    if not inner:
        return CactusGraph(Graph(2, [(0, 1)]))
    b = _Builder(len(inner))
    for i in range(len(inner) - 1):
        b.edge(i, i + 1)
    for i, d in enumerate(inner):
        spine = (i > 0) + (i < len(inner) - 1)
        b.leaf(i, d - spine)
    return b.graph()


def construct_extremal(theorem: Theorem | str, n: int, k: int) -> CactusGraph:
    """A cactus in the class (n, k) attaining the theorem's bound."""
    t = Theorem(theorem)
    if not applies(t, n, k):
        raise InadmissibleError(f"{t.value} does not apply at n={n}, k={k}")
    if t in (Theorem.T1, Theorem.T4) and k <= 1:
        g = cycle(n) if k == 0 else tadpole(n)
    elif t is Theorem.T1:
        g = spider(n, k)
    elif t is Theorem.T4:
        (seq,) = bound_for(t, n, k).sequences
        g = realize_tree_degree_sequence(seq)
    elif t is Theorem.T2:
        if n == k + 1:
            g = star(k)
        elif n == k + 2:
            g = double_star(-(-k // 2), k // 2)
        else:
            hi, lo = -(-k // 3), k // 3
            g = pendant_triangle([hi, lo, k - hi - lo])
    elif t is Theorem.T3:
        if n == 4:
            g = cycle(4)
        elif n % 2 == 1:
            g = triangle_chain((n - 1) // 2)
        else:
            g = bridged_triangle_chain((n - 2) // 2)
    else:
        if (n - k) % 2 == 1:
            g = friendship_with_pendants((n - k - 1) // 2, k)
        elif k >= 1:
            g = friendship_with_pendants((n - k - 2) // 2, k, long_arm=True)
        else:
            g = friendship_with_pendants((n - 4) // 2, 0, square=True)
    if g.n != n or g.k != k:
        raise RuntimeError(f"construction for {t.value} gave n={g.n}, k={g.k}; wanted n={n}, k={k}")
    return g
