"""Weighted directed networks: construction, edge-list I/O, subnetworks.

A network is a list of uniquely labeled nodes plus directed arcs carrying
strictly positive weights. Arcs are oriented: ``i -> j`` and ``j -> i`` are
distinct and may carry different weights. At most one arc exists per ordered
node pair, and self-loops are never stored (a shock cannot revisit a node,
so a self-loop could never participate in any computed quantity).

Node identity is the textual label (datasets usually key on short codes);
integer indices are an internal detail of this module and its consumers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from math import isfinite
from typing import Iterable, NamedTuple


class Arc(NamedTuple):
    """Directed arc between node indices with a positive weight."""

    source: int
    target: int
    weight: float


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of parsing an edge-list document.

    ``errors`` and ``warnings`` hold ``(line_number, message)`` pairs.
    A report carrying errors is only ever seen inside an :class:`EdgeListError`;
    a successfully constructed Network is always paired with an error-free
    report (warnings are allowed).
    """

    errors: tuple[tuple[int, str], ...] = ()
    warnings: tuple[tuple[int, str], ...] = ()
    node_count: int = 0
    arc_count: int = 0


class EdgeListError(ValueError):
    """Hard failure while parsing an edge-list document."""

    def __init__(self, report: ValidationReport):
        self.report = report
        lines = "; ".join(f"line {ln}: {msg}" for ln, msg in report.errors)
        super().__init__(f"invalid edge list: {lines}")


class EmptyInputError(EdgeListError):
    """The document contained no data lines at all."""


class EmptySubnetworkError(ValueError):
    """A node-induced subnetwork turned out to have no arcs."""


@dataclass(frozen=True)
class Network:
    """Immutable weighted directed network.

    Attributes:
        nodes: unique node labels; order is significant (first-appearance
            order when parsed from an edge list).
        arcs: directed arcs as ``Arc(source_index, target_index, weight)``.

    Instances are safe to share across threads: nothing mutates after
    ``__post_init__`` and the cached adjacency is derived data only.
    """

    nodes: tuple[str, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node labels")
        n = len(self.nodes)
        seen: set[tuple[int, int]] = set()
        for arc in self.arcs:
            if not (0 <= arc.source < n and 0 <= arc.target < n):
                raise ValueError(f"arc endpoint out of range: {arc}")
            if arc.source == arc.target:
                raise ValueError(f"self-loop not allowed: {arc}")
            if not (isfinite(arc.weight) and arc.weight > 0):
                raise ValueError(f"non-positive or non-finite weight: {arc}")
            pair = (arc.source, arc.target)
            if pair in seen:
                raise ValueError(f"duplicate arc for node pair {pair}")
            seen.add(pair)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str, float]]) -> "Network":
        """Build a network from ``(source_label, target_label, weight)`` triples.

        Node order is first-appearance order, matching the edge-list parser.
        """
        labels: list[str] = []
        index: dict[str, int] = {}

        def idx(label: str) -> int:
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
            return index[label]

        arcs = [Arc(idx(s), idx(t), float(w)) for s, t, w in edges]
        return cls(tuple(labels), tuple(arcs))

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.nodes)}

    @cached_property
    def out_adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-node outgoing ``(target_index, weight)`` pairs, sorted by target.

        The sort fixes the enumeration order, making every path visit
        sequence deterministic for a given network.
        """
        adj: list[list[tuple[int, float]]] = [[] for _ in self.nodes]
        for arc in self.arcs:
            adj[arc.source].append((arc.target, arc.weight))
        return tuple(tuple(sorted(out)) for out in adj)

    def to_edge_list(self) -> str:
        """Serialize to edge-list text (``source,target,weight`` lines).

        Arcs are written in stored order. Re-parsing reproduces the network
        exactly whenever node order matches first appearance in the arc
        sequence and every node touches an arc, which holds for all parser
        output; isolated nodes have no representation in this format.
        """
        lines = [
            f"{self.nodes[a.source]},{self.nodes[a.target]},{format_weight(a.weight)}"
            for a in self.arcs
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def format_weight(w: float) -> str:
    """Render a weight without a trailing ``.0`` for integral values."""
    return str(int(w)) if w == int(w) else repr(w)


def _split_fields(line: str) -> list[str]:
    if "," in line:
        return [f.strip() for f in line.split(",")]
    return line.split()


def parse_edge_list(text: str) -> tuple[Network, ValidationReport]:
    """Parse an edge-list document into a Network.

    Each data line is ``source<sep>target<sep>weight`` with the separator
    being a comma or a run of whitespace. Blank lines and ``#`` comments are
    ignored. A first data line whose third field is not numeric is treated
    as a header and skipped.

    Self-loop lines register the node but the arc is dropped with a warning.
    Non-positive, non-finite or unparsable weights, duplicate ordered pairs
    and lines with the wrong field count are hard errors; all errors are
    collected before raising so one pass reports every defect.

    Returns:
        ``(network, report)`` where the report carries warnings and counts.

    Raises:
        EmptyInputError: no data lines at all.
        EdgeListError: any hard line error.
    """
    errors: list[tuple[int, str]] = []
    warns: list[tuple[int, str]] = []
    labels: list[str] = []
    index: dict[str, int] = {}
    arcs: list[Arc] = []
    seen_pairs: set[tuple[int, int]] = set()
    content_seen = False  # any non-comment line, header included
    saw_data = False  # lines that were treated as data

    def idx(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        first_content = not content_seen
        content_seen = True
        fields = _split_fields(line)
        if len(fields) != 3:
            saw_data = True
            errors.append((line_no, f"expected 3 fields, got {len(fields)}"))
            continue
        src, tgt, weight_text = fields
        try:
            weight = float(weight_text)
        except ValueError:
            if first_content:
                # Header line: non-numeric third field on the first line.
                continue
            saw_data = True
            errors.append((line_no, f"non-numeric weight {weight_text!r}"))
            continue
        saw_data = True
        if not isfinite(weight) or weight <= 0:
            errors.append((line_no, f"non-positive weight {weight_text!r}"))
            continue
        if src == tgt:
            idx(src)
            warns.append((line_no, f"self-loop on {src!r} dropped"))
            continue
        s, t = idx(src), idx(tgt)
        if (s, t) in seen_pairs:
            errors.append((line_no, f"duplicate arc {src!r} -> {tgt!r}"))
            continue
        seen_pairs.add((s, t))
        arcs.append(Arc(s, t, weight))

    if not saw_data:
        raise EmptyInputError(
            ValidationReport(errors=((0, "no arcs: document has no data lines"),))
        )
    if errors:
        raise EdgeListError(
            ValidationReport(errors=tuple(errors), warnings=tuple(warns))
        )

    net = Network(tuple(labels), tuple(arcs))
    report = ValidationReport(
        warnings=tuple(warns),
        node_count=net.node_count,
        arc_count=net.arc_count,
    )
    return net, report


def parse_node_set(text: str) -> list[str]:
    """Parse a node-set file: one label per line, ``#`` comments allowed.

    Returns labels in file order with duplicates removed.
    """
    labels: list[str] = []
    seen: set[str] = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line and line not in seen:
            seen.add(line)
            labels.append(line)
    return labels


def subnetwork(net: Network, keep: Iterable[str]) -> Network:
    """Extract the node-induced subnetwork on the ``keep`` labels.

    Keeps exactly the arcs of ``net`` with both endpoints in ``keep``,
    weights unchanged. Node order is the order induced from ``net``.
    Unknown labels are reported with a warning, not fatally.

    Raises:
        ValueError: ``keep`` is empty.
        EmptySubnetworkError: no arc survives the extraction.
    """
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("keep set is empty")
    known = set(net.nodes)
    missing = sorted(keep_set - known)
    if missing:
        warnings.warn(
            f"{len(missing)} unknown node label(s) ignored: {', '.join(missing)}",
            stacklevel=2,
        )
    kept_indices = [i for i, label in enumerate(net.nodes) if label in keep_set]
    remap = {old: new for new, old in enumerate(kept_indices)}
    nodes = tuple(net.nodes[i] for i in kept_indices)
    arcs = tuple(
        Arc(remap[a.source], remap[a.target], a.weight)
        for a in net.arcs
        if a.source in remap and a.target in remap
    )
    if not arcs:
        raise EmptySubnetworkError(
            f"empty subnetwork: no arc has both endpoints among {len(keep_set)} kept labels"
        )
    return Network(nodes, arcs)
