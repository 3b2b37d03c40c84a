"""Shock propagation along a path and the threshold test that gates it.

A shock of size xi starts at a path's first node. Crossing an arc adds the
arc weight and multiplies by the discount factor delta:

    size_0 = xi
    size_h = (size_{h-1} + w_h) * delta

delta below 1 damps the shock with distance, above 1 amplifies it, 0 kills
it on the first arc, and 1 turns the trace into plain cumulative sums. The
propagation test compares trace entries against a vector of per-step
thresholds (gamma_1..gamma_kbar); the three comparison conventions differ in
which trace entry faces which threshold, and all three are kept because none
dominates on every network.

Threshold comparisons are exact (>=, no tolerance): an epsilon would shift
path counts unpredictably near ties, and grid parameters are materialized
as exact decimals upstream precisely so ties reproduce.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import ceil, floor, isfinite
from typing import Sequence

from .paths import PathRecord


@dataclass(frozen=True)
class Shock:
    """External solicitation of a node: size xi >= 0 and discount delta >= 0.

    size = 0 encodes "no shock".
    """

    size: float
    delta: float

    def __post_init__(self) -> None:
        if not isfinite(self.size) or self.size < 0:
            raise ValueError(f"shock size must be >= 0, got {self.size}")
        if not isfinite(self.delta) or self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")


@dataclass(frozen=True)
class PcVector:
    """Per-step propagation thresholds (gamma_1, ..., gamma_kbar).

    Length must equal the longest path length of the target network; that is
    checked where the vector meets a network, not here.
    """

    gammas: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.gammas:
            raise ValueError("threshold vector must be nonempty")
        for i, g in enumerate(self.gammas, start=1):
            if not isfinite(g) or g <= 0:
                raise ValueError(f"gamma_{i} must be strictly positive, got {g}")

    def __len__(self) -> int:
        return len(self.gammas)


@dataclass(frozen=True)
class ShockTrace:
    """Shock sizes along a path: (size_0, size_1, ..., size_k)."""

    sizes: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.sizes)


class PcStrategy(enum.Enum):
    """Which trace entry must clear which threshold.

    The serialized token names are a stable interface: they appear in CLI
    flags, config files, and emitted JSON.

    PRE_TRAVERSAL: the size held before traversing the h-th arc must clear
        that arc's threshold (size_{h-1} >= gamma_h for h = 1..k). Default.
    POST_ARRIVAL: the size upon arriving at the h-th node must clear that
        node's threshold (size_h >= gamma_h for h = 1..k).
    LITERAL: size_s >= gamma_s for s = 1..k-1; every 1-path passes
        vacuously.
    """

    PRE_TRAVERSAL = "pre-traversal"
    POST_ARRIVAL = "post-arrival"
    LITERAL = "literal"

    @classmethod
    def from_token(cls, token: str) -> "PcStrategy":
        for member in cls:
            if member.value == token:
                return member
        valid = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown strategy {token!r}; valid: {valid}")


DEFAULT_STRATEGY = PcStrategy.PRE_TRAVERSAL


def shock_trace(weights: Sequence[float], shock: Shock) -> ShockTrace:
    """Run the propagation recursion along ``weights``.

    Returns the k+1 sizes (size_0 = shock.size included). ``weights`` must
    be nonempty.
    """
    if not weights:
        raise ValueError("weights must be nonempty")
    sizes = [shock.size]
    current = shock.size
    for w in weights:
        current = (current + w) * shock.delta
        sizes.append(current)
    return ShockTrace(tuple(sizes))


def is_pc(
    path: PathRecord,
    shock: Shock,
    gamma: PcVector,
    strategy: PcStrategy = DEFAULT_STRATEGY,
) -> bool:
    """Decide whether ``path`` carries the shock to its terminal node.

    Raises ValueError when the path is longer than ``gamma`` (a threshold
    vector sized for a different network).
    """
    k = path.length
    if k > len(gamma.gammas):
        raise ValueError(
            f"path length {k} exceeds threshold vector length {len(gamma.gammas)}"
        )
    trace = shock_trace(path.weights, shock).sizes
    gammas = gamma.gammas
    if strategy is PcStrategy.PRE_TRAVERSAL:
        return all(trace[h - 1] >= gammas[h - 1] for h in range(1, k + 1))
    if strategy is PcStrategy.POST_ARRIVAL:
        return all(trace[h] >= gammas[h - 1] for h in range(1, k + 1))
    if strategy is PcStrategy.LITERAL:
        return all(trace[s] >= gammas[s - 1] for s in range(1, k))
    raise AssertionError(f"unhandled strategy {strategy!r}")


def gamma_preset(preset_id: str, k_bar: int) -> PcVector:
    """Expand a named threshold family to length ``k_bar``.

    gamma1: all ones (low thresholds everywhere).
    gamma2: ones on the first ceil(kbar/2) steps, then doubling
        (gamma_i = 2^(i - ceil(kbar/2) + 1)): permissive early, harsh late.
    gamma3: halving from 2^floor(kbar/2) down to 2, then ones
        (gamma_i = 2^(floor(kbar/2) - i + 1) for i <= floor(kbar/2)):
        harsh early, permissive late.
    """
    if k_bar < 1:
        raise ValueError(f"k_bar must be >= 1, got {k_bar}")
    if preset_id == "gamma1":
        return PcVector((1.0,) * k_bar)
    if preset_id == "gamma2":
        half = ceil(k_bar / 2)
        return PcVector(
            tuple(1.0 if i <= half else float(2 ** (i - half + 1)) for i in range(1, k_bar + 1))
        )
    if preset_id == "gamma3":
        half = floor(k_bar / 2)
        return PcVector(
            tuple(float(2 ** (half - i + 1)) if i <= half else 1.0 for i in range(1, k_bar + 1))
        )
    raise ValueError(f"unknown gamma preset {preset_id!r}; valid: gamma1, gamma2, gamma3")


GAMMA_PRESETS = ("gamma1", "gamma2", "gamma3")
