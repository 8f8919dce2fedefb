"""Strictly improving local rewrites on cacti and a first-improvement search.

Every move is an edge edit ``(remove, add)`` matched by a structural
pattern.  The pattern alone guarantees that the result is again a cactus
with the same ``n`` and ``k``; the degree conditions in the pattern fix the
sign of the change of each index.  :func:`apply_move` recomputes everything
from scratch and raises if either claim fails.

Catalog (sign of the change of pi1 / pi2):

=========  ====  ====  ==================================================
lemma      pi1   pi2   edit
=========  ====  ====  ==================================================
L1         -     -     merge two linked cycles into one
L2'        -     -     open a cycle edge, re-hang a bridge branch on it
L3         +     -     tree: move a branch from u to v, d(u) - d(v) >= 2
PRO_STEP   +     -     move a leaf to a least-degree non-pendant vertex
T1_SHIFT   -     +     tree: move a branch from u to v, d(v) >= d(u) >= 3
L4a        +     +     split a cycle of length >= 5 into a triangle
L4b        +     +     two 4-cycles become three triangles
L5a        +     +     close a dense-path spine of >= 3 vertices
L5b        +     +     fold one length-2 dense path onto another
L6         +     +     fold a 4-cycle vertex onto a length-2 dense path
L7         -     +     move a block between two vertices of one cycle
L8a        +     +     close a bridge path of length >= 2 between cycles
L8b        -     +     absorb a bridge between two cycles into one cycle
L9         +/-   +     tidy a hanging tree with an inner vertex of degree >= 3
L10        -     +     move every block of u onto v0 on a shared cycle
=========  ====  ====  ==================================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .bounds import class_is_nonempty
from .graph_core import CactusGraph, Edge, Graph, _norm, is_cactus, pendant_trees, cycle_links
from .indices import ExponentLike, IndexValue, as_exponent, index_value


class Lemma(str, Enum):
    L1 = "L1"
    L2P = "L2'"
    L3 = "L3"
    L4A = "L4a"
    L4B = "L4b"
    L5A = "L5a"
    L5B = "L5b"
    L6 = "L6"
    L7 = "L7"
    L8A = "L8a"
    L8B = "L8b"
    L9 = "L9"
    L10 = "L10"
    PRO_STEP = "PRO_STEP"
    T1_SHIFT = "T1_SHIFT"


LEMMA_ORDER = {lem: i for i, lem in enumerate(Lemma)}
INDICES = ("pi1", "pi2")


class StaleMoveError(ValueError):
    """The move was matched on a different graph."""


class RewriteCheckError(AssertionError):
    """A move broke class membership or failed to improve its index."""


@dataclass(frozen=True)
class SearchConfig:
    objective: str = "minimize"  # "minimize" | "maximize"
    index: str = "pi2"  # "pi1" | "pi2"
    c: Fraction = Fraction(1)
    max_steps: int = 1000

    def __post_init__(self):
        if self.objective not in ("minimize", "maximize"):
            raise ValueError(f"objective must be minimize/maximize, got {self.objective!r}")
        if self.index not in INDICES:
            raise ValueError(f"index must be pi1/pi2, got {self.index!r}")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        object.__setattr__(self, "c", as_exponent(self.c))

    @property
    def sign(self) -> int:
        return 1 if self.objective == "maximize" else -1


@dataclass(frozen=True)
class RewriteMove:
    lemma_id: Lemma
    site: tuple[int, ...]
    remove: tuple[Edge, ...]
    add: tuple[Edge, ...]
    effects: tuple[tuple[str, int], ...]  # claimed sign per index
    direction: str = ""  # "increases_index" | "decreases_index"
    target_index: str = ""  # "Pi1c" | "Pi2" | "both"
    c: Fraction = Fraction(1)
    note: str = ""
    source: Graph | None = field(default=None, compare=False, repr=False)

    def effect(self, index: str) -> int:
        return dict(self.effects)[index]

    @property
    def targets(self) -> tuple[str, ...]:
        return INDICES if self.target_index == "both" else (
            ("pi1",) if self.target_index == "Pi1c" else ("pi2",))

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id.value,
            "site": list(self.site),
            "remove": [list(e) for e in self.remove],
            "add": [list(e) for e in self.add],
            "direction": self.direction,
            "target_index": self.target_index,
            "note": self.note,
        }


def _net(remove, add) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    r = {_norm(*e) for e in remove}
    a = {_norm(*e) for e in add}
    return tuple(sorted(r - a)), tuple(sorted(a - r))


def _raw(lemma: Lemma, site, remove, add, pi1: int, pi2: int, note: str = "") -> RewriteMove:
    r, a = _net(remove, add)
    return RewriteMove(lemma, tuple(site), r, a, (("pi1", pi1), ("pi2", pi2)), note=note)


# --------------------------------------------------------------------------
# structural helpers


def _cycle_nbrs(g: CactusGraph, v: int, ci: int) -> tuple[int, int]:
    cyc = g.cycles[ci]
    i = cyc.index(v)
    a, b = cyc[i - 1], cyc[(i + 1) % len(cyc)]
    return (a, b) if a < b else (b, a)


def _blocks_at(g: CactusGraph, v: int, skip_cycle: int | None = None) -> list[tuple[int, ...]]:
    """Neighbour groups of ``v``, one per block: a bridge or the two cycle neighbours."""
    out = [(x,) for x in sorted(g.neighbors(v)) if g.is_bridge(v, x)]
    out += [_cycle_nbrs(g, v, ci) for ci in g.cycles_at[v] if ci != skip_cycle]
    return out


def _transfer(u: int, v: int, nbrs) -> tuple[list[Edge], list[Edge]]:
    return [(u, y) for y in nbrs], [(v, y) for y in nbrs]


def _has_cycle(g: CactusGraph) -> bool:
    return bool(g.cycles)


# --------------------------------------------------------------------------
# matchers; each yields moves with their claimed effects


def _l1(g: CactusGraph) -> Iterator[RewriteMove]:
    for i, j, path in cycle_links(g):
        z1, zp = path[0], path[-1]
        for x11 in _cycle_nbrs(g, z1, i):
            for xp1 in _cycle_nbrs(g, zp, j):
                yield _raw(Lemma.L1, (z1, x11, zp, xp1), [(z1, x11), (zp, xp1)], [(x11, xp1)], -1, -1)


def _l2p(g: CactusGraph) -> Iterator[RewriteMove]:
    if not _has_cycle(g):
        return
    deg = g.degrees
    on_cycle = {v for v in range(g.n) if g.cycles_at[v]}
    branches = []
    for a, b in g.edges:
        if not g.is_bridge(a, b):
            continue
        for v, v2 in ((a, b), (b, a)):
            side = g.side(v, v2)
            if not side & on_cycle:
                branches.append((v, v2, side))
    carries = {v for v, _, _ in branches if v in on_cycle}
    for e in sorted(g.cycle_edges):
        for u1, w1 in (e, e[::-1]):
            if deg[u1] < 3:
                continue
            note = "" if u1 in carries else "p=1"
            for v, v2, side in branches:
                if v == w1 or w1 in side:
                    continue
                if deg[v] - (2 if v == u1 else 1) < 2:
                    continue
                yield _raw(Lemma.L2P, (u1, w1, v, v2), [(u1, w1), (v, v2)], [(w1, v2)], -1, -1, note)


def _tree_branch_moves(g: CactusGraph, lemma: Lemma, ok, pi1: int, pi2: int) -> Iterator[RewriteMove]:
    """Move one subtree from ``u`` to ``v`` in a tree whenever ``ok(d(u), d(v))``."""
    deg = g.degrees
    for u in range(g.n):
        if deg[u] < 3:
            continue
        for v in range(g.n):
            if v == u or deg[v] < 2 or not ok(deg[u], deg[v]):
                continue
            for x in sorted(g.neighbors(u)):
                if x == v or v in g.side(u, x):
                    continue
                yield _raw(lemma, (u, x, v), [(u, x)], [(v, x)], pi1, pi2)


def _l3(g: CactusGraph) -> Iterator[RewriteMove]:
    if _has_cycle(g):
        return
    yield from _tree_branch_moves(g, Lemma.L3, lambda du, dv: du - dv >= 2, +1, -1)


def _t1_shift(g: CactusGraph) -> Iterator[RewriteMove]:
    if _has_cycle(g):
        return
    yield from _tree_branch_moves(g, Lemma.T1_SHIFT, lambda du, dv: dv >= du, -1, +1)


def _pro_step(g: CactusGraph) -> Iterator[RewriteMove]:
    if not _has_cycle(g):
        return
    deg = g.degrees
    inner = [v for v in range(g.n) if deg[v] >= 2]
    low = min(deg[v] for v in inner)
    targets = [v for v in inner if deg[v] == low]
    for u in inner:
        if deg[u] < low + 2:
            continue
        for x in sorted(g.neighbors(u)):
            if deg[x] != 1:
                continue
            for v in targets:
                yield _raw(Lemma.PRO_STEP, (u, x, v), [(u, x)], [(v, x)], +1, -1)


def _l4a(g: CactusGraph) -> Iterator[RewriteMove]:
    for cyc in g.cycles:
        m = len(cyc)
        if m < 5:
            continue
        for i in range(m):
            for step in (1, -1):
                v1, v3, v4 = cyc[i], cyc[(i + 2 * step) % m], cyc[(i + 3 * step) % m]
                yield _raw(Lemma.L4A, (v1, v3, v4), [(v3, v4)], [(v1, v3), (v1, v4)], +1, +1)


def _rotations(cyc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    m = len(cyc)
    for i in range(m):
        yield tuple(cyc[(i + j) % m] for j in range(m))
        yield tuple(cyc[(i - j) % m] for j in range(m))


def _l4b(g: CactusGraph) -> Iterator[RewriteMove]:
    squares = [c for c in g.cycles if len(c) == 4]
    for c1 in squares:
        for c2 in squares:
            if c1 is c2:
                continue
            for x1, x2, x3, x4 in _rotations(c1):
                if x1 > x3:
                    continue  # (x1, x3) and (x3, x1) give the same edit
                hang = g.graph.bfs(x4, banned_edges=frozenset({_norm(x1, x4), _norm(x3, x4)}))
                for y1, y2, y3, y4 in _rotations(c2):
                    if {x1, x3, x4} & {y1, y2, y4} or y1 in hang or y2 in hang:
                        continue
                    yield _raw(Lemma.L4B, (x1, x2, x3, x4, y1, y2, y3, y4),
                               [(x1, x4), (x3, x4), (y1, y4)],
                               [(x1, x3), (x4, y1), (x4, y2), (y2, y4)], +1, +1)


def _l5a(g: CactusGraph) -> Iterator[RewriteMove]:
    for dp in g.dense_paths:
        if dp.length >= 3:
            a, w = dp.spine[0], dp.spine[-1]
            yield _raw(Lemma.L5A, dp.spine, [], [(a, w)], +1, +1)


def _short_dense(g: CactusGraph):
    return [dp for dp in g.dense_paths if dp.length == 2]


def _l5b(g: CactusGraph) -> Iterator[RewriteMove]:
    short = _short_dense(g)
    for p in short:
        x1, x2 = p.spine
        for q in short:
            y1, y2 = q.spine
            if q is p or y2 == x2 or y2 == x1 or y1 == x2:
                continue
            y31 = q.leaves[0]
            yield _raw(Lemma.L5B, (x1, x2, y1, y2, y31), [(y1, y2), (y2, y31)],
                       [(y1, y31), (x1, y2), (x2, y2)], +1, +1)


def _l6(g: CactusGraph) -> Iterator[RewriteMove]:
    short = _short_dense(g)
    if not short:
        return
    for cyc in g.cycles:
        if len(cyc) != 4:
            continue
        for i, x2 in enumerate(cyc):
            x1, x3 = cyc[i - 1], cyc[(i + 1) % 4]
            hang = g.graph.bfs(x2, banned_edges=frozenset({_norm(x1, x2), _norm(x2, x3)}))
            for p in short:
                y1, y2 = p.spine
                if y1 in hang or y2 in hang:
                    continue
                yield _raw(Lemma.L6, (x1, x2, x3, y1, y2), [(x1, x2), (x2, x3)],
                           [(x2, y1), (x2, y2), (x1, x3)], +1, +1)


def _l7(g: CactusGraph) -> Iterator[RewriteMove]:
    deg = g.degrees
    for ci, cyc in enumerate(g.cycles):
        for v in cyc:
            if deg[v] < 3:
                continue
            for u in cyc:
                if u == v or deg[u] < deg[v]:
                    continue
                for nbrs in _blocks_at(g, v, skip_cycle=ci):
                    if deg[v] - len(nbrs) < 2:
                        continue
                    r, a = _transfer(v, u, nbrs)
                    yield _raw(Lemma.L7, (v, u) + nbrs, r, a, -1, +1)


def _l8(g: CactusGraph) -> Iterator[RewriteMove]:
    deg = g.degrees
    for i, j, path in cycle_links(g):
        if len(path) >= 3:
            yield _raw(Lemma.L8A, path, [], [(path[0], path[-1])], +1, +1)
        elif len(path) == 2:
            for u1, u2, cj in ((path[0], path[1], j), (path[1], path[0], i)):
                if deg[u1] < deg[u2]:
                    continue
                for v2 in _cycle_nbrs(g, u2, cj):
                    yield _raw(Lemma.L8B, (u1, u2, v2), [(u2, v2)], [(u1, v2)], -1, +1)


def _l9(g: CactusGraph) -> Iterator[RewriteMove]:
    deg = g.degrees
    for v0, tree in pendant_trees(g):
        big = [u for u in tree if deg[u] >= 3]
        if not big:
            continue
        dist = g.graph.distances_from(v0)
        leaves = [x for x in tree if deg[x] == 1]

        def to_leaf(u: int) -> int:
            du = g.graph.distances_from(u)
            return min(du[x] for x in leaves)

        u = min(big, key=lambda w: (to_leaf(w), w))
        if dist[u] >= 2:
            yield _raw(Lemma.L9, (u, v0), [], [(u, v0)], +1, +1, "add")
        elif deg[v0] >= deg[u]:
            y1 = min(x for x in g.neighbors(u) if x != v0)
            yield _raw(Lemma.L9, (u, v0, y1), [(u, y1)], [(v0, y1)], -1, +1, "to_root")
        else:
            y = min(x for ci in g.cycles_at[v0] for x in _cycle_nbrs(g, v0, ci))
            yield _raw(Lemma.L9, (u, v0, y), [(v0, y)], [(u, y)], -1, +1, "from_root")


def _l10(g: CactusGraph) -> Iterator[RewriteMove]:
    deg = g.degrees
    for ci, cyc in enumerate(g.cycles):
        on = set(cyc)
        for u in cyc:
            if not any(g.is_bridge(u, x) for x in g.neighbors(u)):
                continue
            off = tuple(sorted(x for x in g.neighbors(u) if x not in on))
            for v0 in cyc:
                if v0 == u or deg[v0] < deg[u]:
                    continue
                r, a = _transfer(u, v0, off)
                yield _raw(Lemma.L10, (u, v0) + off, r, a, -1, +1)


MATCHERS = (_l1, _l2p, _l3, _l4a, _l4b, _l5a, _l5b, _l6, _l7, _l8, _l9, _l10, _pro_step, _t1_shift)


# --------------------------------------------------------------------------
# public operations


def _finish(m: RewriteMove, g: CactusGraph, cfg: SearchConfig) -> RewriteMove:
    want = cfg.sign
    both = all(s == want for _, s in m.effects)
    return RewriteMove(
        m.lemma_id, m.site, m.remove, m.add, m.effects,
        direction="increases_index" if want > 0 else "decreases_index",
        target_index="both" if both else ("Pi1c" if cfg.index == "pi1" else "Pi2"),
        c=cfg.c, note=m.note, source=g.graph,
    )


def find_moves(g: CactusGraph, cfg: SearchConfig) -> list[RewriteMove]:
    """Every matched move whose claimed effect on ``cfg.index`` has the wanted sign.

    Ordered by lemma, then site, so the first entry is the deterministic choice.
    """
    found = {}
    for matcher in MATCHERS:
        for m in matcher(g):
            if m.effect(cfg.index) == cfg.sign and (m.remove or m.add):
                found.setdefault((m.lemma_id, m.site, m.remove, m.add), m)
    moves = [_finish(m, g, cfg) for m in found.values()]
    moves.sort(key=lambda m: (LEMMA_ORDER[m.lemma_id], m.site, m.remove, m.add))
    return moves


def _value(g, index: str, c: Fraction) -> IndexValue:
    return index_value(g, index, c)


def apply_move(g: CactusGraph, m: RewriteMove) -> CactusGraph:
    """Apply ``m`` and re-verify class membership and strict improvement."""
    if m.source is not None and m.source != g.graph:
        raise StaleMoveError(f"{m.lemma_id.value} at {m.site} was matched on another graph")
    try:
        out = g.graph.edit(m.remove, m.add)
    except (KeyError, ValueError) as exc:
        raise StaleMoveError(str(exc)) from exc
    check = is_cactus(out)
    if not check:
        raise RewriteCheckError(f"{m.lemma_id.value} at {m.site}: result is not a cactus ({check.reason})")
    h = CactusGraph(out)
    if h.n != g.n or h.k != g.k:
        raise RewriteCheckError(f"{m.lemma_id.value} at {m.site}: (n, k) went from ({g.n}, {g.k}) to ({h.n}, {h.k})")
    want = 1 if m.direction == "increases_index" else -1
    for index in m.targets:
        got = _value(h, index, m.c).compare(_value(g, index, m.c))
        if got != want:
            raise RewriteCheckError(f"{m.lemma_id.value} at {m.site}: {index} did not move in direction {m.direction}")
    return h


@dataclass(frozen=True)
class TraceStep:
    lemma_id: str
    site: tuple[int, ...]
    index_before: IndexValue
    index_after: IndexValue

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "site": list(self.site),
            "index_before": self.index_before.to_json(),
            "index_after": self.index_after.to_json(),
        }


@dataclass
class SearchResult:
    graph: CactusGraph
    trace: list[TraceStep]
    exhausted: bool  # stopped by max_steps rather than at a fixpoint

    def trace_json(self) -> list[dict]:
        return [s.to_json() for s in self.trace]


def local_search(g: CactusGraph, cfg: SearchConfig) -> SearchResult:
    """First-improvement descent (or ascent) until no move applies or ``max_steps``."""
    trace: list[TraceStep] = []
    cur = g
    for _ in range(cfg.max_steps):
        moves = find_moves(cur, cfg)
        if not moves:
            return SearchResult(cur, trace, False)
        m = moves[0]
        nxt = apply_move(cur, m)
        trace.append(TraceStep(m.lemma_id.value, m.site,
                               _value(cur, cfg.index, cfg.c), _value(nxt, cfg.index, cfg.c)))
        cur = nxt
    return SearchResult(cur, trace, bool(find_moves(cur, cfg)))


# --------------------------------------------------------------------------
# Pro: strip hanging trees and spread them over the core


def two_core(g: CactusGraph) -> set[int]:
    """Vertices surviving repeated deletion of degree <= 1 vertices."""
    deg = list(g.degrees)
    alive = set(range(g.n))
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    stack.append(w)
    return alive


def pro_algorithm(g: CactusGraph, c: ExponentLike = 1) -> CactusGraph:
    """Detach every hanging tree and re-hang each, in order of its root, on a core
    vertex of least current degree (ties to the smallest label).

    The core is the 2-core, so it has no pendant vertices.  Trees keep their
    internal edges and their root, so ``n`` and ``k`` are unchanged.
    """
    if g.k < 1 or g.n < g.k + 4:
        raise ValueError(f"Pro needs k >= 1 and n >= k + 4, got n={g.n}, k={g.k}")
    core = two_core(g)
    if not core:
        raise ValueError("Pro needs a cycle: the input is a tree")
    keep = [(u, v) for u, v in g.edges if not ((u in core) ^ (v in core))]
    roots = sorted(v for v in range(g.n) if v not in core and g.neighbors(v) & core)
    deg = {v: sum(1 for w in g.neighbors(v) if w in core) for v in core}
    for r in roots:
        target = min(core, key=lambda v: (deg[v], v))
        keep.append((target, r))
        deg[target] += 1
    out = CactusGraph(Graph(g.n, keep))
    if out.k != g.k:
        raise RewriteCheckError("Pro changed the number of pendant vertices")
    if index_value(out, "pi1", c) < index_value(g, "pi1", c):
        raise RewriteCheckError("Pro decreased pi1")
    return out


# --------------------------------------------------------------------------
# random cacti


def _grow(n: int, rng: random.Random, tree: bool) -> list[Edge]:
    edges: list[Edge] = []
    m = 1
    while m < n:
        v = rng.randrange(m)
        room = n - m
        size = 1 if tree or room < 2 or rng.random() < 0.5 else rng.randint(2, room)
        ring = [v] + list(range(m, m + size))
        if size == 1:
            edges.append((v, m))
        else:
            edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
        m += size
    return edges


def random_cactus(n: int, rng: random.Random, k: int | None = None, tree: bool = False,
                  tries: int = 10000) -> CactusGraph:
    """Random cactus on ``n`` vertices grown by attaching end blocks.

    Each step glues a pendant edge or (unless ``tree``) a cycle of random
    length at a uniformly chosen vertex.  With ``k`` given, a base on
    ``n - k`` vertices is grown instead and ``k`` leaves are hung on it so
    that every pendant vertex of the base is covered; bases with more than
    ``k`` pendant vertices are redrawn.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k is not None and not class_is_nonempty(n, k):
        raise ValueError(f"no cactus has n={n} and k={k}")
    for _ in range(tries):
        if k is None or k == 0:
            edges = _grow(n, rng, tree)
        else:
            base = n - k
            edges = _grow(base, rng, tree)
            deg = [0] * base
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            must = [v for v in range(base) if deg[v] <= 1]
            if len(must) > k or (base == 1 and k < 2):
                continue
            hosts = must + [rng.randrange(base) for _ in range(k - len(must))]
            edges += [(h, base + i) for i, h in enumerate(hosts)]
        perm = list(range(n))
        rng.shuffle(perm)
        g = CactusGraph(Graph(n, edges).relabel(perm))
        if k is None or g.k == k:
            return g
    raise ValueError(f"no random cactus with n={n}, k={k} after {tries} draws")
