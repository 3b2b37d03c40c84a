"""Exhaustive simple-path enumeration over a weighted directed network.

A k-path is a directed walk through k+1 pairwise-distinct nodes, so every
prefix of a k-path is itself a path. Enumeration is depth-first with
backtracking and a constant-time membership test on the in-progress path.
Paths are streamed to a visitor callback rather than materialized: networks
of modest size already hold hundreds of thousands of simple paths, and the
downstream consumers need a single pass, not storage.

Runtime grows exponentially with network size; ``max_len`` is the safety
valve when exploring graphs whose longest path is not known to be small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional

from .graph import Network


@dataclass(frozen=True)
class PathRecord:
    """One simple path: its node indices and the weights of its arcs.

    ``nodes`` has pairwise-distinct entries and ``weights[i]`` is the weight
    of the arc ``nodes[i] -> nodes[i+1]``, so ``len(weights) == len(nodes) - 1``.
    """

    nodes: tuple[int, ...]
    weights: tuple[float, ...]

    @property
    def length(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class PathStats:
    """Census of the simple paths of a network.

    ``counts_by_length[k]`` is the number of k-paths; every length from 1 to
    ``k_bar`` is present (a k-path always contains a (k-1)-path), and
    ``k_bar == 0`` only for an arcless network. ``counts_by_start`` splits
    the same census by ``(start_label, k)``; summing it over start labels
    reproduces ``counts_by_length`` because the path set is a disjoint union
    over starting nodes.

    ``complete`` is False when a visitor stopped enumeration early; with a
    ``max_len`` cap the stats are complete for lengths up to the cap and
    ``k_bar`` is the capped maximum.
    """

    counts_by_length: Mapping[int, int]
    k_bar: int
    counts_by_start: Mapping[tuple[str, int], int] = field(default_factory=dict)
    complete: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts_by_length.values())


def merge_path_stats(a: PathStats, b: PathStats) -> PathStats:
    """Combine stats from enumerations over disjoint start-node sets.

    Associative and commutative, so per-start shards may be accumulated in
    any order (the contract that makes per-start parallel enumeration safe).
    """
    counts = dict(a.counts_by_length)
    for k, c in b.counts_by_length.items():
        counts[k] = counts.get(k, 0) + c
    by_start = dict(a.counts_by_start)
    for key, c in b.counts_by_start.items():
        by_start[key] = by_start.get(key, 0) + c
    return PathStats(
        counts_by_length=counts,
        k_bar=max(a.k_bar, b.k_bar),
        counts_by_start=by_start,
        complete=a.complete and b.complete,
    )


class _StopEnumeration(Exception):
    pass


def enumerate_paths(
    net: Network,
    max_len: Optional[int] = None,
    visit: Optional[Callable[[PathRecord], object]] = None,
    starts: Optional[Iterable[str]] = None,
) -> PathStats:
    """Visit every simple path of ``net`` exactly once.

    Args:
        net: the network to enumerate.
        max_len: cap on path length; ``None`` runs to the longest simple path.
        visit: optional callback invoked once per path, in a deterministic
            order (start nodes in node order, successors by node index).
            Returning ``False`` aborts enumeration; the returned stats are
            then flagged ``complete=False``.
        starts: restrict enumeration to paths starting at these labels.
            Stats from disjoint start sets merge into the full census via
            :func:`merge_path_stats`.

    Returns:
        PathStats consistent with the set of visited paths.
    """
    if max_len is not None and max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    if starts is None:
        start_indices = range(net.node_count)
    else:
        start_indices = [net.label_index[s] for s in starts]

    adjacency = net.out_adjacency
    cap = max_len if max_len is not None else net.node_count - 1
    counts: dict[int, int] = {}
    by_start: dict[tuple[str, int], int] = {}
    on_path = bytearray(net.node_count)
    node_stack: list[int] = []
    weight_stack: list[float] = []

    def extend(u: int, depth: int, start_counts: dict[int, int]) -> None:
        for v, w in adjacency[u]:
            if on_path[v]:
                continue
            k = depth + 1
            start_counts[k] = start_counts.get(k, 0) + 1
            if visit is not None:
                node_stack.append(v)
                weight_stack.append(w)
                record = PathRecord(tuple(node_stack), tuple(weight_stack))
                keep_going = visit(record)
                if keep_going is False:
                    raise _StopEnumeration
                if k < cap:
                    on_path[v] = 1
                    extend(v, k, start_counts)
                    on_path[v] = 0
                node_stack.pop()
                weight_stack.pop()
            elif k < cap:
                on_path[v] = 1
                extend(v, k, start_counts)
                on_path[v] = 0

    complete = True
    for s in start_indices:
        start_counts: dict[int, int] = {}
        on_path[s] = 1
        if visit is not None:
            node_stack.append(s)
        try:
            extend(s, 0, start_counts)
        except _StopEnumeration:
            complete = False
        finally:
            on_path[s] = 0
            if visit is not None:
                node_stack.clear()
                weight_stack.clear()
        label = net.nodes[s]
        for k, c in start_counts.items():
            counts[k] = counts.get(k, 0) + c
            by_start[(label, k)] = by_start.get((label, k), 0) + c
        if not complete:
            break

    k_bar = max(counts) if counts else 0
    return PathStats(
        counts_by_length=dict(sorted(counts.items())),
        k_bar=k_bar,
        counts_by_start=by_start,
        complete=complete,
    )


def path_stats(net: Network) -> PathStats:
    """Full path census: per-length counts, per-start counts and the longest
    path length (exact, by exhaustive enumeration)."""
    return enumerate_paths(net)
