from itertools import combinations

import pytest

from vnumber.corpus import graph_from_code, labelled_count, pair_order
from vnumber.graph import Graph


def all_graphs(max_n, min_n=1, with_edges=False):
    for n in range(min_n, max_n + 1):
        pairs = pair_order(n)
        for code in range(labelled_count(n)):
            if with_edges and code == 0:
                continue
            yield graph_from_code(n, code, pairs)


def iso_reps(max_n, min_n=1, with_edges=False):
    from vnumber.corpus import exhaustive
    for _, g in exhaustive(min_n, max_n, dedup=True):
        if with_edges and g.m == 0:
            continue
        yield g


def graph(n, *edges):
    """Graph from 0-based edge pairs."""
    return Graph.from_edges(n, edges)


@pytest.fixture
def c4():
    return graph(4, (0, 1), (1, 2), (2, 3), (3, 0))


_CRITERIA = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--vnumber-force", action="store_true", default=False,
                     help="also run the n=19 glued-cycle acceptance case (about 8 minutes)")


@pytest.fixture(scope="session")
def criterion_log(request):
    """Collects one PASS/FAIL/SKIP line per acceptance criterion; echoed in the terminal summary."""
    lines = request.config.stash.setdefault(_CRITERIA, [])

    def log(number, status, text):
        line = f"criterion {number:>2}: {status} {text}"
        print(line)
        lines.append(line)

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_CRITERIA, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
