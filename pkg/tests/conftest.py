import functools
import itertools

import networkx as nx
import pytest

from subsum.gf import FieldSpec
from subsum.graph import BitGraph, build_graph

DESK_GRID = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]


@functools.lru_cache(maxsize=None)
def graph(n, q):
    return build_graph(FieldSpec.from_order(q), n)


@functools.lru_cache(maxsize=None)
def field(q):
    return FieldSpec.from_order(q)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def span_set(f, vectors, n):
    """Every linear combination of ``vectors``, by brute force over coefficient tuples."""
    out = set()
    vectors = list(vectors)
    for coeffs in itertools.product(range(f.q), repeat=len(vectors)):
        v = [0] * n
        for c, row in zip(coeffs, vectors):
            v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
        out.add(tuple(v))
    return frozenset(out)


def rank_by_counting(f, vectors, n):
    size = len(span_set(f, vectors, n))
    r = 0
    while f.q**r < size:
        r += 1
    assert f.q**r == size
    return r


# small fixtures with known invariants

@pytest.fixture
def k3():
    return BitGraph.complete(3)


@pytest.fixture
def single_edge():
    return BitGraph.from_edges(2, [(0, 1)])


@pytest.fixture
def c5():
    return BitGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def grotzsch():
    h = nx.mycielski_graph(4)
    return BitGraph.from_edges(h.number_of_nodes(), h.edges())


# one line per acceptance criterion, printed after the run

ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if report.when == "call" and marker in report.nodeid:
        tail = report.nodeid.split(marker, 1)[1]
        num, _, title = tail.partition("_")
        ACCEPTANCE_RESULTS[int(num)] = ("PASS" if report.passed else "FAIL", title.replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"{status}  criterion {num:>2}: {title}")
