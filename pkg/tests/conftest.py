import itertools

import networkx as nx
import pytest

from gyrograph import GyroGroup
from gyrograph.graphs import MultiGraph

ACCEPTANCE_LINES: list[str] = []


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def product_table(t1, t2):
    n1, n2 = len(t1), len(t2)
    return [[t1[a // n2][b // n2] * n2 + t2[a % n2][b % n2] for b in range(n1 * n2)]
            for a in range(n1 * n2)]


def symmetric_group_table(k):
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]


def relabel(table, pi):
    """Table of the isomorphic copy with element x renamed pi[x]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[pi[a]][pi[b]] = pi[table[a][b]]
    return out


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for (u, v), p in g.edges.items():
        for _ in range(p):
            h.add_edge(u, v)
    return h


def weighted_nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for (u, v), p in g.edges.items():
        h.add_edge(u, v, p=p)
    return h


def make_graph(n, edges):
    """A plain multigraph on vertices 0..n-1 for analysis tests."""
    return MultiGraph("lcayley", tuple(range(n)), dict(edges))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
