"""Shared fixtures plus the acceptance-results summary hook."""

from __future__ import annotations

import random

import pytest

import synthnets
from pathshock import Network, parse_edge_list

G3_TEXT = "a b 2\na c 3\nb c 1\n"

_ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture
def g3_text() -> str:
    return G3_TEXT


@pytest.fixture
def g3_net() -> Network:
    net, _ = parse_edge_list(G3_TEXT)
    return net


@pytest.fixture
def cycle3_net() -> Network:
    return Network.from_edges([("a", "b", 1.0), ("b", "c", 2.0), ("c", "a", 3.0)])


@pytest.fixture(scope="session")
def region_a_net() -> Network:
    return Network.from_edges(
        (s, t, float(w)) for s, t, w in synthnets.region_a_edges()
    )


@pytest.fixture(scope="session")
def region_b_net() -> Network:
    return Network.from_edges(
        (s, t, float(w)) for s, t, w in synthnets.region_b_edges()
    )


def _random_network(
    rng: random.Random,
    min_nodes: int = 3,
    max_nodes: int = 8,
    arc_prob: float = 0.35,
) -> Network:
    n = rng.randint(min_nodes, max_nodes)
    labels = [f"n{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j], float(rng.randint(1, 9)))
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < arc_prob
    ]
    if not edges:
        i, j = rng.sample(range(n), 2)
        edges.append((labels[i], labels[j], float(rng.randint(1, 9))))
    return Network.from_edges(edges)


@pytest.fixture
def make_random_network():
    """Callable (rng, ...) -> Network with at least one arc and integer
    weights in 1..9."""
    return _random_network


@pytest.fixture
def acceptance_recorder():
    """Record one pass/fail line per acceptance criterion and assert it.

    The lines are replayed uncaptured in the terminal summary, so the
    verdicts are visible in a plain ``pytest -v`` run.
    """

    def record(criterion: int, description: str, passed: bool, detail: str = "") -> None:
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {description}"
        _ACCEPTANCE_RESULTS.append(line)
        assert passed, line + (f" [{detail}]" if detail else "")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_RESULTS):
            terminalreporter.write_line(line)
