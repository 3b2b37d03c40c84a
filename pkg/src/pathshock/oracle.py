"""Brute-force reference implementations for the test suite.

Everything here is written for obviousness, not speed, and on purpose does
not share enumeration or counting code with the optimized modules: paths
are found by rescanning the raw arc list at every step and materialized in
full, and the resilience formula is transcribed term by term. Only the
shock recursion and the threshold-test semantics are reused, because those
definitions are what the rest of the suite pins down with hand-derived
vectors. Inputs are size-guarded; never call this outside tests.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Network
from .paths import PathRecord
from .propagation import DEFAULT_STRATEGY, PcStrategy, PcVector, Shock, is_pc
from .resilience import ThetaVector

_MAX_NODES = 10


def naive_all_paths(net: Network) -> list[PathRecord]:
    """Every simple path of ``net``, fully materialized. n <= 10 enforced."""
    if net.node_count > _MAX_NODES:
        raise ValueError(
            f"oracle is limited to {_MAX_NODES} nodes, got {net.node_count}"
        )
    found: list[PathRecord] = []

    def grow(nodes: list[int], weights: list[float]) -> None:
        last = nodes[-1]
        for arc in net.arcs:
            if arc.source != last or arc.target in nodes:
                continue
            longer_nodes = nodes + [arc.target]
            longer_weights = weights + [arc.weight]
            found.append(PathRecord(tuple(longer_nodes), tuple(longer_weights)))
            grow(longer_nodes, longer_weights)

    for start in range(net.node_count):
        grow([start], [])
    return found


def naive_mu(
    net: Network,
    gamma: PcVector,
    theta: ThetaVector,
    shock: Shock,
    strategy: PcStrategy = DEFAULT_STRATEGY,
) -> Fraction:
    """Resilience by direct transcription of its definition.

    For each length k, the fraction of k-paths that pass the threshold
    test, combined as the theta-weighted mean. Exact rational output.
    Arcless networks have no paths and no defined resilience: error.
    """
    paths = naive_all_paths(net)
    if not paths:
        raise ValueError("network has no arcs, so no path census and no resilience")
    k_bar = max(p.length for p in paths)
    if len(gamma.gammas) != k_bar:
        raise ValueError(f"gamma has {len(gamma.gammas)} components, network k_bar is {k_bar}")
    if len(theta) != k_bar:
        raise ValueError(f"theta has {len(theta)} components, network k_bar is {k_bar}")
    result = Fraction(0)
    for k in range(1, k_bar + 1):
        k_paths = [p for p in paths if p.length == k]
        passing = sum(1 for p in k_paths if is_pc(p, shock, gamma, strategy))
        result += theta.thetas[k - 1] * Fraction(passing, len(k_paths))
    return result
