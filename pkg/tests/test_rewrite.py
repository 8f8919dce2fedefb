import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cacti, path, ring, to_nx
from zagreb_cacti.constructions import construct_extremal, triangle_chain
from zagreb_cacti.enumeration import enumerate_cacti
from zagreb_cacti.graph_core import CactusGraph, Graph
from zagreb_cacti.indices import index_value
from zagreb_cacti.rewrite import (
    Lemma, RewriteMove, SearchConfig, StaleMoveError, apply_move, find_moves, local_search,
    pro_algorithm, random_cactus, two_core,
)

MIN_PI2 = SearchConfig("minimize", "pi2")
MAX_PI2 = SearchConfig("maximize", "pi2")
MIN_PI1 = SearchConfig("minimize", "pi1")
MAX_PI1 = SearchConfig("maximize", "pi1")


def lemmas(g, cfg):
    return {m.lemma_id for m in find_moves(g, cfg)}


def strictly_better(before, after, cfg):
    a, b = index_value(before, cfg.index, cfg.c), index_value(after, cfg.index, cfg.c)
    return a.compare(b) == -cfg.sign


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig("sideways")
        with pytest.raises(ValueError):
            SearchConfig(index="M1")
        with pytest.raises(ValueError):
            SearchConfig(max_steps=-1)

    def test_sign(self):
        assert MIN_PI2.sign == -1 and MAX_PI2.sign == 1


class TestMoves:
    def test_l1_on_bridged_cycles(self):
        g = CactusGraph(Graph(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]))
        moves = [m for m in find_moves(g, MIN_PI1) if m.lemma_id is Lemma.L1]
        assert moves
        for m in moves:
            assert strictly_better(g, apply_move(g, m), MIN_PI1)

    def test_l4a_chord_on_c5(self):
        g = ring(5)
        moves = [m for m in find_moves(g, MAX_PI1) if m.lemma_id is Lemma.L4A]
        assert moves
        after = apply_move(g, moves[0])
        assert index_value(g, "pi1") == 32 and index_value(after, "pi1") == 64

    def test_l3_balances_tree(self):
        es = [(0, i) for i in range(1, 5)] + [(0, 5), (5, 6)]
        g = CactusGraph(Graph(7, es))
        assert [d for d in g.degree_sequence() if d > 1] == [5, 2]
        moves = [m for m in find_moves(g, MIN_PI2) if m.lemma_id is Lemma.L3]
        assert moves
        after = apply_move(g, moves[0])
        assert index_value(after, "pi2") < index_value(g, "pi2")
        assert (after.n, after.k) == (7, 5)

    def test_l9_reattaches_branching_tree(self):
        g = CactusGraph(Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)]))
        moves = [m for m in find_moves(g, MAX_PI2) if m.lemma_id is Lemma.L9]
        assert moves
        for m in moves:
            assert index_value(apply_move(g, m), "pi2") > index_value(g, "pi2")

    @pytest.mark.parametrize("g,cfg", [
        (construct_extremal("T1", 6, 3), MIN_PI1),
        (ring(4), MAX_PI1),
        (path(5), MIN_PI2),
    ])
    def test_extremal_graphs_have_no_moves(self, g, cfg):
        assert find_moves(g, cfg) == []

    def test_moves_sorted_and_unique(self):
        g = random_cactus(9, random.Random(3))
        ms = find_moves(g, MIN_PI2)
        keys = [(m.lemma_id, m.site, m.remove, m.add) for m in ms]
        assert len(set(keys)) == len(keys)

    def test_stale_move(self):
        g = ring(5)
        m = find_moves(g, MAX_PI1)[0]
        with pytest.raises(StaleMoveError):
            apply_move(ring(6), m)

    def test_move_json(self):
        m = find_moves(ring(5), MAX_PI1)[0]
        j = m.to_json()
        assert j["lemma_id"] == m.lemma_id.value and j["direction"] == "increases_index"
        assert all(len(e) == 2 for e in j["remove"] + j["add"])


@settings(max_examples=60, deadline=None)
@given(cacti(4, 9), st.sampled_from([MIN_PI1, MAX_PI1, MIN_PI2, MAX_PI2]))
def test_every_move_is_sound(g, cfg):
    for m in find_moves(g, cfg):
        h = apply_move(g, m)
        assert (h.n, h.k) == (g.n, g.k)
        assert strictly_better(g, h, cfg)


class TestLocalSearch:
    def test_reaches_t4_minimum_from_every_start(self):
        for g in enumerate_cacti(6, 3).graphs:
            res = local_search(g, MIN_PI2)
            assert index_value(res.graph, "pi2") == 432
            assert not res.exhausted

    def test_c4_is_fixed(self):
        res = local_search(ring(4), MAX_PI1)
        assert res.trace == [] and res.graph.graph == ring(4).graph

    def test_p5_is_fixed(self):
        res = local_search(path(5), MIN_PI2)
        assert res.trace == [] and res.graph.degree_sequence() == (2, 2, 2, 1, 1)

    def test_tree_fixpoint_is_balanced(self):
        rng = random.Random(11)
        for _ in range(30):
            g = random_cactus(7, rng, k=3, tree=True)
            res = local_search(g, MIN_PI2)
            inner = [d for d in res.graph.degrees if d > 1]
            assert max(inner) - min(inner) <= 1
            assert not res.graph.cycles

    def test_trace_strictly_monotone(self):
        for n in range(3, 8):
            for g in enumerate_cacti(n).graphs:
                for cfg in (MIN_PI2, MAX_PI1):
                    res = local_search(g, cfg)
                    vals = [s.index_before for s in res.trace] + [index_value(res.graph, cfg.index, cfg.c)]
                    assert all(a.compare(b) == -cfg.sign for a, b in zip(vals, vals[1:]))
                    assert len(res.trace) <= len({v for v in vals})

    def test_max_steps(self):
        g = random_cactus(9, random.Random(5), tree=True)
        res = local_search(g, SearchConfig("maximize", "pi2", max_steps=1))
        assert len(res.trace) <= 1

    def test_trace_json(self):
        res = local_search(ring(5), MAX_PI1)
        j = res.trace_json()
        assert j and set(j[0]) >= {"lemma_id", "site", "index_before", "index_after"}


class TestPro:
    def test_redistributes_junction_pendants(self):
        core = triangle_chain(3)
        junction = max(range(core.n), key=lambda v: core.degrees[v])
        g = CactusGraph(Graph(9, list(core.edges) + [(junction, 7), (junction, 8)]))
        out = pro_algorithm(g)
        assert (out.n, out.k) == (9, 2)
        assert index_value(out, "pi1") >= index_value(g, "pi1")
        hosts = {next(iter(out.neighbors(v))) for v in range(out.n) if out.degrees[v] == 1}
        assert len(hosts) == 2 and all(g.degrees[h] == 2 for h in hosts)

    def test_idempotent(self):
        rng = random.Random(2)
        seen = 0
        while seen < 40:
            g = random_cactus(rng.randint(5, 11), rng)
            if g.k < 1 or g.n < g.k + 4 or not g.cycles:
                continue
            seen += 1
            once = pro_algorithm(g)
            assert index_value(once, "pi1") >= index_value(g, "pi1")
            assert nx.is_isomorphic(to_nx(pro_algorithm(once).graph), to_nx(once.graph))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            pro_algorithm(CactusGraph(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])))
        with pytest.raises(ValueError):
            pro_algorithm(path(7))

    def test_two_core(self):
        g = CactusGraph(Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]))
        assert two_core(g) == {0, 1, 2}


def test_random_cactus_respects_k():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(4, 10)
        k = rng.randint(2, n - 2)
        g = random_cactus(n, rng, k=k)
        assert (g.n, g.k) == (n, k)
