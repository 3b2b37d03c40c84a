"""Command-line interface.

Subcommands:
    info     network size, longest path length, per-length path counts
    paths    the path census by itself, optionally capped at a length
    mu       one resilience value for explicit shock parameters
    sweep    the full (delta, xi) grid, emitted as CSV (plus JSON/SVG)
    extract  node-induced subnetwork written back as an edge list

Exit codes are frozen for scripting: 0 success, 1 I/O trouble (unreadable
or empty input, unwritable output), 2 validation trouble (malformed edge
lines, bad parameters, preset/size mismatches).

Threshold and weight vectors are given either as preset names (gamma1..3,
theta1..3, expanded against the network's measured longest path length) or
as explicit comma-separated values. Grids accept comma-separated values
and/or start:stop:step ranges; ranges step in decimal, so 0:1:0.1 hits 0.3
exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, replace
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from .graph import (
    EdgeListError,
    EmptyInputError,
    EmptySubnetworkError,
    Network,
    parse_edge_list,
    parse_node_set,
    subnetwork,
)
from .output import format_mu, surface_to_csv, surface_to_json, surface_to_svg
from .paths import enumerate_paths, path_stats
from .propagation import GAMMA_PRESETS, PcStrategy, PcVector, Shock, gamma_preset
from .resilience import (
    DEFAULT_DELTA_GRID,
    DEFAULT_XI_GRID,
    THETA_PRESETS,
    ThetaVector,
    mu,
    pc_census,
    sweep,
    theta_preset,
)

_STRATEGY_TOKENS = tuple(s.value for s in PcStrategy)

VectorSpec = Union[str, Sequence[float]]


@dataclass
class SweepConfig:
    """Parameters of a sweep, as merged from config file and flags."""

    gamma: Optional[VectorSpec] = None
    theta: Optional[VectorSpec] = None
    xi_grid: tuple[float, ...] = DEFAULT_XI_GRID
    delta_grid: tuple[float, ...] = DEFAULT_DELTA_GRID
    strategy: str = PcStrategy.PRE_TRAVERSAL.value
    emit_per_k: bool = False


_CONFIG_KEYS = ("gamma", "theta", "xi_grid", "delta_grid", "strategy", "emit_per_k")


def expand_grid_text(text: str) -> tuple[float, ...]:
    """Comma-separated values and/or start:stop:step ranges, decimal-stepped."""
    values: list[float] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" in chunk:
            fields = chunk.split(":")
            if len(fields) != 3:
                raise ValueError(f"grid range must be start:stop:step, got {chunk!r}")
            try:
                start, stop, step = (Decimal(f.strip()) for f in fields)
            except InvalidOperation as exc:
                raise ValueError(f"bad grid range {chunk!r}: {exc}") from None
            if step <= 0:
                raise ValueError(f"grid step must be positive, got {step}")
            current = start
            while current <= stop:
                values.append(float(current))
                current += step
        else:
            values.append(float(chunk))
    if not values:
        raise ValueError(f"grid specification {text!r} is empty")
    return tuple(values)


def _resolve_grid(value: Union[str, Sequence[float]]) -> tuple[float, ...]:
    if isinstance(value, str):
        return expand_grid_text(value)
    return tuple(float(v) for v in value)


def resolve_gamma(spec: VectorSpec, k_bar: Callable[[], int]) -> PcVector:
    if isinstance(spec, str):
        text = spec.strip()
        if text in GAMMA_PRESETS:
            return gamma_preset(text, k_bar())
        if text and text[0].isalpha():
            raise ValueError(
                f"unknown gamma preset {text!r}; valid: {', '.join(GAMMA_PRESETS)}"
            )
        return PcVector(tuple(float(p) for p in text.split(",") if p.strip()))
    return PcVector(tuple(float(v) for v in spec))


def resolve_theta(spec: VectorSpec, k_bar: Callable[[], int]) -> ThetaVector:
    if isinstance(spec, str):
        text = spec.strip()
        if text in THETA_PRESETS:
            return theta_preset(text, k_bar())
        if text and text[0].isalpha():
            raise ValueError(
                f"unknown theta preset {text!r}; valid: {', '.join(THETA_PRESETS)}"
            )
        # Split first, keep the pieces as strings: ThetaVector reads them
        # as exact decimals.
        return ThetaVector(tuple(p.strip() for p in text.split(",") if p.strip()))
    return ThetaVector(tuple(spec))


def _load_network(path_text: str) -> Network:
    text = Path(path_text).read_text(encoding="utf-8")
    net, report = parse_edge_list(text)
    for line_no, message in report.warnings:
        print(f"warning: line {line_no}: {message}", file=sys.stderr)
    return net


def _write(path_text: str, content: str) -> None:
    with open(path_text, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(content)


def _lazy_k_bar(net: Network) -> Callable[[], int]:
    cache: list[int] = []

    def measure() -> int:
        if not cache:
            cache.append(path_stats(net).k_bar)
        return cache[0]

    return measure


def cmd_info(args: argparse.Namespace) -> int:
    net = _load_network(args.edges)
    stats = path_stats(net)
    counts = " ".join(f"k={k}:{c}" for k, c in sorted(stats.counts_by_length.items()))
    line = f"nodes={net.node_count} arcs={net.arc_count} kbar={stats.k_bar}; paths:"
    if counts:
        line += f" {counts}"
    print(line)
    return 0


def cmd_paths(args: argparse.Namespace) -> int:
    net = _load_network(args.edges)
    stats = enumerate_paths(net, max_len=args.max_k)
    for k, count in sorted(stats.counts_by_length.items()):
        print(f"k={k}:{count}")
    print(f"total:{stats.total}")
    print(f"kbar:{stats.k_bar}")
    return 0


def cmd_mu(args: argparse.Namespace) -> int:
    net = _load_network(args.edges)
    k_bar = _lazy_k_bar(net)
    gamma = resolve_gamma(args.gamma, k_bar)
    theta = resolve_theta(args.theta, k_bar)
    shock = Shock(args.xi, args.delta)
    strategy = PcStrategy.from_token(args.strategy)
    census = pc_census(net, gamma, shock, strategy)
    print(format_mu(mu(census, theta)))
    return 0


def _config_from_file(path_text: str) -> SweepConfig:
    text = Path(path_text).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("config file must hold a JSON object")
    unknown = sorted(set(payload) - set(_CONFIG_KEYS))
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(unknown)}")
    cfg = SweepConfig()
    if "gamma" in payload:
        cfg.gamma = payload["gamma"]
    if "theta" in payload:
        cfg.theta = payload["theta"]
    if "xi_grid" in payload:
        cfg.xi_grid = _resolve_grid(payload["xi_grid"])
    if "delta_grid" in payload:
        cfg.delta_grid = _resolve_grid(payload["delta_grid"])
    if "strategy" in payload:
        cfg.strategy = PcStrategy.from_token(payload["strategy"]).value
    if "emit_per_k" in payload:
        if not isinstance(payload["emit_per_k"], bool):
            raise ValueError("config emit_per_k must be a boolean")
        cfg.emit_per_k = payload["emit_per_k"]
    return cfg


def cmd_sweep(args: argparse.Namespace) -> int:
    net = _load_network(args.edges)
    cfg = _config_from_file(args.config) if args.config else SweepConfig()
    if args.gamma is not None:
        cfg = replace(cfg, gamma=args.gamma)
    if args.theta is not None:
        cfg = replace(cfg, theta=args.theta)
    if args.xi_grid is not None:
        cfg = replace(cfg, xi_grid=expand_grid_text(args.xi_grid))
    if args.delta_grid is not None:
        cfg = replace(cfg, delta_grid=expand_grid_text(args.delta_grid))
    if args.strategy is not None:
        cfg = replace(cfg, strategy=args.strategy)
    if args.per_k:
        cfg = replace(cfg, emit_per_k=True)
    if cfg.gamma is None:
        raise ValueError("no gamma given: pass --gamma or set it in the config file")
    if cfg.theta is None:
        raise ValueError("no theta given: pass --theta or set it in the config file")

    k_bar = _lazy_k_bar(net)
    gamma = resolve_gamma(cfg.gamma, k_bar)
    theta = resolve_theta(cfg.theta, k_bar)
    strategy = PcStrategy.from_token(cfg.strategy)
    surface = sweep(
        net,
        gamma,
        theta,
        xi_grid=cfg.xi_grid,
        delta_grid=cfg.delta_grid,
        strategy=strategy,
        keep_per_k=cfg.emit_per_k,
        network_label=Path(args.edges).name,
    )
    _write(args.output, surface_to_csv(surface))
    if args.json:
        _write(args.json, surface_to_json(surface))
    if args.svg:
        _write(args.svg, surface_to_svg(surface))
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    net = _load_network(args.edges)
    labels = parse_node_set(Path(args.nodes).read_text(encoding="utf-8"))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        sub = subnetwork(net, labels)
    for item in caught:
        print(f"warning: {item.message}", file=sys.stderr)
    _write(args.output, sub.to_edge_list())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathshock",
        description="Path-based shock-propagation resilience of weighted directed networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="network and path-census summary")
    p_info.add_argument("edges", help="edge list file (source target weight)")
    p_info.set_defaults(func=cmd_info)

    p_paths = sub.add_parser("paths", help="per-length simple path counts")
    p_paths.add_argument("edges")
    p_paths.add_argument("--max-k", type=int, default=None, help="cap enumeration at this length")
    p_paths.set_defaults(func=cmd_paths)

    p_mu = sub.add_parser("mu", help="single resilience value")
    p_mu.add_argument("edges")
    p_mu.add_argument("--gamma", required=True, help="preset (gamma1..gamma3) or comma list")
    p_mu.add_argument("--theta", required=True, help="preset (theta1..theta3) or comma list")
    p_mu.add_argument("--xi", type=float, required=True, help="shock size")
    p_mu.add_argument("--delta", type=float, required=True, help="discount factor")
    p_mu.add_argument(
        "--strategy", choices=_STRATEGY_TOKENS, default=PcStrategy.PRE_TRAVERSAL.value
    )
    p_mu.set_defaults(func=cmd_mu)

    p_sweep = sub.add_parser("sweep", help="resilience over a (delta, xi) grid")
    p_sweep.add_argument("edges")
    p_sweep.add_argument("--config", help="JSON config file (flags override it)")
    p_sweep.add_argument("--gamma", help="preset or comma list")
    p_sweep.add_argument("--theta", help="preset or comma list")
    p_sweep.add_argument("--xi-grid", help="values and/or start:stop:step ranges")
    p_sweep.add_argument("--delta-grid", help="values and/or start:stop:step ranges")
    p_sweep.add_argument("--strategy", choices=_STRATEGY_TOKENS, default=None)
    p_sweep.add_argument("-o", "--output", required=True, help="CSV output path")
    p_sweep.add_argument("--json", help="also write the surface as JSON")
    p_sweep.add_argument("--svg", help="also write a heatmap as SVG")
    p_sweep.add_argument(
        "--per-k", action="store_true", default=None, help="keep per-length counts in the JSON"
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_extract = sub.add_parser("extract", help="node-induced subnetwork as an edge list")
    p_extract.add_argument("edges")
    p_extract.add_argument("--nodes", required=True, help="file with one node label per line")
    p_extract.add_argument("-o", "--output", required=True)
    p_extract.set_defaults(func=cmd_extract)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyInputError as exc:
        for _, message in exc.report.errors:
            print(f"error: {message}", file=sys.stderr)
        return 1
    except EdgeListError as exc:
        for line_no, message in exc.report.errors:
            print(f"error: line {line_no}: {message}", file=sys.stderr)
        return 2
    except EmptySubnetworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
