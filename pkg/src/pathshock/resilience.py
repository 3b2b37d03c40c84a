"""Resilience of a weighted directed network to propagating shocks.

For each path length k, count how many k-paths carry a shock of size xi all
the way to their terminal node under discount delta and thresholds gamma
(the PC census), then take the theta-weighted mean of the per-length
fractions. The result lies in [0, 1]: 0 means every shock is absorbed
immediately, 1 means shocks propagate over all available paths.

The sweep evaluates a whole (delta, xi) grid in a single enumeration pass:
each visited path advances one propagation step simultaneously for every
grid cell (small numpy matrices on a stack mirroring the DFS), so the grid
costs little more than one plain path census. Elementwise float64 steps are
bit-identical to running the scalar recursion per cell, so per-cell results
match :func:`pathshock.propagation.is_pc` exactly.

Resilience values are exact rationals (`fractions.Fraction`): counts are
integers and theta weights are stored as rationals, which makes boundary
checks such as "the surface is identically 0" or "this cell equals 1"
exact instead of tolerance-dependent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isfinite
from numbers import Rational
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .graph import Network
from .paths import PathRecord, enumerate_paths
from .propagation import DEFAULT_STRATEGY, PcStrategy, PcVector, Shock

ThetaInput = Union[int, float, str, Rational]

_SUM_TOLERANCE = Fraction(1, 10**12)

DEFAULT_XI_GRID: tuple[float, ...] = tuple(float(x) for x in range(11))
DEFAULT_DELTA_GRID: tuple[float, ...] = tuple(d / 10 for d in range(11))


def _to_fraction(value: ThetaInput) -> Fraction:
    # str goes through Fraction's decimal parser so "0.3" means 3/10,
    # not the nearest binary double.
    return Fraction(value)


@dataclass(frozen=True)
class ThetaVector:
    """Path-length weights (theta_1, ..., theta_kbar), summing to 1.

    Components are kept as exact rationals. Inputs may be ints, floats,
    decimal strings, or Fractions; a sum within 1e-12 of 1 is accepted and
    then normalized to exactly 1, so downstream equality checks on the
    resilience value stay exact. Inputs further from 1 are rejected.
    """

    thetas: tuple[Fraction, ...]

    def __init__(self, thetas: Sequence[ThetaInput]) -> None:
        values = tuple(_to_fraction(t) for t in thetas)
        if not values:
            raise ValueError("theta vector must be nonempty")
        for i, t in enumerate(values, start=1):
            if t < 0:
                raise ValueError(f"theta_{i} must be >= 0, got {t}")
        total = sum(values)
        if abs(total - 1) > _SUM_TOLERANCE:
            raise ValueError(f"theta components must sum to 1 within 1e-12, got {float(total)!r}")
        if total != 1:
            values = tuple(t / total for t in values)
        object.__setattr__(self, "thetas", values)

    def __len__(self) -> int:
        return len(self.thetas)


@dataclass(frozen=True)
class PcCensus:
    """Per-length path counts under one (gamma, shock, strategy) setting.

    ``totals[k]`` counts all k-paths, ``pc_counts[k]`` the ones that carry
    the shock through; 0 <= pc_counts[k] <= totals[k] for every k = 1..kbar.
    """

    pc_counts: Mapping[int, int]
    totals: Mapping[int, int]
    gamma: PcVector
    shock: Shock
    strategy: PcStrategy

    def __post_init__(self) -> None:
        if set(self.pc_counts) != set(self.totals):
            raise ValueError("pc_counts and totals must cover the same path lengths")
        for k, total in self.totals.items():
            passed = self.pc_counts[k]
            if not 0 <= passed <= total:
                raise ValueError(f"pc count {passed} out of range [0, {total}] at length {k}")

    @property
    def k_bar(self) -> int:
        return max(self.totals)


@dataclass(frozen=True)
class SurfaceMeta:
    """Identity of the computation behind a surface."""

    network: str
    node_count: int
    arc_count: int
    k_bar: int
    gammas: tuple[float, ...]
    thetas: tuple[Fraction, ...]
    strategy: PcStrategy


@dataclass(frozen=True)
class Surface:
    """Resilience over a (delta, xi) grid.

    ``mu[d][x]`` is the exact rational resilience at delta_grid[d],
    xi_grid[x]. ``per_k``, present when the sweep was asked to keep it,
    stores the per-length PC counts of each cell as ``per_k[d][x][k-1]``;
    ``totals`` is shared by all cells (path counts do not depend on the
    shock).
    """

    delta_grid: tuple[float, ...]
    xi_grid: tuple[float, ...]
    mu: tuple[tuple[Fraction, ...], ...]
    meta: SurfaceMeta
    totals: Mapping[int, int]
    per_k: Optional[tuple[tuple[tuple[int, ...], ...], ...]] = None

    def __post_init__(self) -> None:
        if len(self.mu) != len(self.delta_grid):
            raise ValueError("mu row count must match delta grid length")
        for row in self.mu:
            if len(row) != len(self.xi_grid):
                raise ValueError("mu column count must match xi grid length")
            for value in row:
                if not 0 <= value <= 1:
                    raise ValueError(f"resilience value {value} outside [0, 1]")

    def census_at(self, delta_index: int, xi_index: int) -> PcCensus:
        """Reconstruct the PC census of one grid cell (needs ``per_k``)."""
        if self.per_k is None:
            raise ValueError("surface was computed without per-k counts")
        counts = self.per_k[delta_index][xi_index]
        return PcCensus(
            pc_counts={k: counts[k - 1] for k in sorted(self.totals)},
            totals=dict(self.totals),
            gamma=PcVector(self.meta.gammas),
            shock=Shock(self.xi_grid[xi_index], self.delta_grid[delta_index]),
            strategy=self.meta.strategy,
        )


def theta_preset(preset_id: str, k_bar: int) -> ThetaVector:
    """Expand a named weight family to length ``k_bar``.

    theta1: uniform 1/kbar.
    theta2: theta_i = 2^-i with the last weight tied to the one before it
        (short paths dominate); needs k_bar >= 2.
    theta3: mirror image, theta_i = 2^-(kbar-i+1) with the first weight tied
        to the second (long paths dominate); needs k_bar >= 2.

    All three sum to exactly 1.
"""
    if preset_id == "theta1":
        if k_bar < 1:
            raise ValueError(f"k_bar must be >= 1, got {k_bar}")
        return ThetaVector((Fraction(1, k_bar),) * k_bar)
    if preset_id == "theta2":
        if k_bar < 2:
            raise ValueError(f"theta2 needs k_bar >= 2, got {k_bar}")
        weights = [Fraction(1, 2**i) for i in range(1, k_bar)]
        weights.append(weights[-1])
        return ThetaVector(tuple(weights))
    if preset_id == "theta3":
        if k_bar < 2:
            raise ValueError(f"theta3 needs k_bar >= 2, got {k_bar}")
        weights = [Fraction(1, 2 ** (k_bar - i + 1)) for i in range(2, k_bar + 1)]
        weights.insert(0, weights[0])
        return ThetaVector(tuple(weights))
    raise ValueError(f"unknown theta preset {preset_id!r}; valid: theta1, theta2, theta3")


THETA_PRESETS = ("theta1", "theta2", "theta3")


def mu(census: PcCensus, theta: ThetaVector) -> Fraction:
    """Theta-weighted mean of the per-length PC fractions, as an exact
    rational in [0, 1]."""
    k_bar = census.k_bar
    if len(theta) != k_bar:
        raise ValueError(f"theta has {len(theta)} components but the census has k_bar={k_bar}")
    return sum(
        (
            theta.thetas[k - 1] * Fraction(census.pc_counts[k], census.totals[k])
            for k in range(1, k_bar + 1)
        ),
        start=Fraction(0),
    )


def _validate_grid(name: str, grid: Sequence[float]) -> tuple[float, ...]:
    values = tuple(float(v) for v in grid)
    if not values:
        raise ValueError(f"{name} grid must be nonempty")
    for v in values:
        if not isfinite(v) or v < 0:
            raise ValueError(f"{name} grid entries must be finite and >= 0, got {v}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} grid must be strictly increasing")
    return values


def _run_grid(
    net: Network,
    gamma: PcVector,
    xi_values: tuple[float, ...],
    delta_values: tuple[float, ...],
    strategy: PcStrategy,
) -> tuple[np.ndarray, Mapping[int, int]]:
    """One enumeration pass; returns (pc[k-1, d, x] int64 array, totals).

    Raises if the threshold vector length differs from the measured longest
    path length (either direction).
    """
    k_max = len(gamma.gammas)
    gammas = gamma.gammas
    n_delta, n_xi = len(delta_values), len(xi_values)
    delta_col = np.array(delta_values, dtype=np.float64).reshape(n_delta, 1)
    trace0 = np.tile(np.array(xi_values, dtype=np.float64), (n_delta, 1))
    alive0 = np.ones((n_delta, n_xi), dtype=bool)
    pc = np.zeros((k_max, n_delta, n_xi), dtype=np.int64)

    # states[d] is (trace, alive) after d arcs on the current DFS prefix,
    # or None once every grid cell is dead (the subtree then costs nothing
    # beyond the enumeration itself). Pre-order visiting guarantees the
    # parent state sits at index k-1 when a k-path arrives.
    states: list[Optional[tuple[np.ndarray, np.ndarray]]] = [(trace0, alive0)]

    def visit(record: PathRecord) -> None:
        k = record.length
        if k > k_max:
            raise ValueError(
                f"network has paths of length {k} but the threshold vector has "
                f"{k_max} components; size gamma to the network's k_bar"
            )
        del states[k:]
        parent = states[k - 1]
        if parent is None:
            states.append(None)
            return
        trace, alive = parent
        w = record.weights[-1]
        if strategy is PcStrategy.PRE_TRAVERSAL:
            alive = alive & (trace >= gammas[k - 1])
            trace = (trace + w) * delta_col
        elif strategy is PcStrategy.POST_ARRIVAL:
            trace = (trace + w) * delta_col
            alive = alive & (trace >= gammas[k - 1])
        else:
            if k > 1:
                alive = alive & (trace >= gammas[k - 2])
            trace = (trace + w) * delta_col
        if alive.any():
            pc[k - 1] += alive
            states.append((trace, alive))
        else:
            states.append(None)

    stats = enumerate_paths(net, visit=visit)
    if stats.k_bar != k_max:
        raise ValueError(
            f"threshold vector has {k_max} components but the network's longest "
            f"path has length {stats.k_bar}"
        )
    return pc, stats.counts_by_length


def pc_census(
    net: Network,
    gamma: PcVector,
    shock: Shock,
    strategy: PcStrategy = DEFAULT_STRATEGY,
) -> PcCensus:
    """Count, per length, the paths that carry ``shock`` through.

    Single streaming enumeration; totals equal the plain path census.
    """
    pc, totals = _run_grid(net, gamma, (shock.size,), (shock.delta,), strategy)
    counts = {k: int(pc[k - 1, 0, 0]) for k in sorted(totals)}
    return PcCensus(
        pc_counts=counts,
        totals=dict(totals),
        gamma=gamma,
        shock=shock,
        strategy=strategy,
    )


def sweep(
    net: Network,
    gamma: PcVector,
    theta: ThetaVector,
    xi_grid: Sequence[float] = DEFAULT_XI_GRID,
    delta_grid: Sequence[float] = DEFAULT_DELTA_GRID,
    strategy: PcStrategy = DEFAULT_STRATEGY,
    *,
    keep_per_k: bool = False,
    network_label: str = "",
) -> Surface:
    """Evaluate the resilience over every (delta, xi) grid cell.

    All cells are computed in one enumeration pass. Grids must be nonempty,
    nonnegative and strictly increasing. ``keep_per_k`` additionally stores
    each cell's per-length PC counts on the surface.
    """
    xi_values = _validate_grid("xi", xi_grid)
    delta_values = _validate_grid("delta", delta_grid)
    if len(theta) != len(gamma.gammas):
        raise ValueError(
            f"gamma has {len(gamma.gammas)} components but theta has {len(theta)}"
        )
    pc, totals = _run_grid(net, gamma, xi_values, delta_values, strategy)
    k_bar = len(gamma.gammas)

    # mu = sum_k theta_k * pc_k / total_k, folded as (theta_k/total_k) * pc_k.
    cell_weights = [theta.thetas[k - 1] / totals[k] for k in range(1, k_bar + 1)]
    mu_rows = []
    for d in range(len(delta_values)):
        row = []
        for x in range(len(xi_values)):
            value = sum(
                (cell_weights[k - 1] * int(pc[k - 1, d, x]) for k in range(1, k_bar + 1)),
                start=Fraction(0),
            )
            row.append(value)
        mu_rows.append(tuple(row))

    per_k = None
    if keep_per_k:
        per_k = tuple(
            tuple(
                tuple(int(pc[k - 1, d, x]) for k in range(1, k_bar + 1))
                for x in range(len(xi_values))
            )
            for d in range(len(delta_values))
        )

    meta = SurfaceMeta(
        network=network_label or f"<{net.node_count} nodes, {net.arc_count} arcs>",
        node_count=net.node_count,
        arc_count=net.arc_count,
        k_bar=k_bar,
        gammas=tuple(float(g) for g in gamma.gammas),
        thetas=theta.thetas,
        strategy=strategy,
    )
    return Surface(
        delta_grid=delta_values,
        xi_grid=xi_values,
        mu=tuple(mu_rows),
        meta=meta,
        totals=dict(totals),
        per_k=per_k,
    )


def critical_xi(surface: Surface) -> dict[float, Optional[float]]:
    """Smallest grid xi with resilience exactly 1, per delta row (or None
    when the row never saturates)."""
    result: dict[float, Optional[float]] = {}
    for d, delta in enumerate(surface.delta_grid):
        found: Optional[float] = None
        for x, xi in enumerate(surface.xi_grid):
            if surface.mu[d][x] == 1:
                found = xi
                break
        result[delta] = found
    return result
