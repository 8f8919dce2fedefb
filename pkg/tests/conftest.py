import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from zagreb_cacti.graph_core import CactusGraph, Graph
from zagreb_cacti.rewrite import random_cactus

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def path(n: int) -> CactusGraph:
    return CactusGraph(Graph(n, [(i, i + 1) for i in range(n - 1)]))


def ring(n: int) -> CactusGraph:
    return CactusGraph(Graph(n, [(i, (i + 1) % n) for i in range(n)]))


def star(k: int) -> CactusGraph:
    return CactusGraph(Graph(k + 1, [(0, i) for i in range(1, k + 1)]))


BOWTIE = CactusGraph(Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]))


@st.composite
def cacti(draw, n_min=1, n_max=12, tree=False):
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_cactus(n, random.Random(seed), tree=tree)


@st.composite
def graphs(draw, n_max=9):
    n = draw(st.integers(1, n_max))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture
def rng():
    return random.Random(0)
