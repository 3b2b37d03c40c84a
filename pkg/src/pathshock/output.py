"""Deterministic serialization of resilience surfaces.

Three formats, all reproducible byte for byte from identical inputs:

* CSV: header ``delta,xi,mu``, rows delta-major then xi. Resilience values
  carry 12 significant digits, except exact 0 and exact 1 which print as
  ``0`` and ``1`` so saturation is detectable without parsing tolerances.
* JSON: the full surface with metadata. Threshold and weight vectors are
  always stored expanded (never as preset names), resilience values both as
  floats and as exact ``p/q`` rational strings, so a surface re-read from
  its JSON equals the in-memory one exactly.
* SVG: a fixed-layout heatmap, delta on the horizontal axis, xi increasing
  upward, linear color ramp from near-white to deep blue. Assembled by
  plain string formatting with no library and no timestamps.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .propagation import PcStrategy
from .resilience import Surface, SurfaceMeta

# Heatmap layout constants (pixels).
_CELL = 36
_MARGIN_LEFT = 64
_MARGIN_BOTTOM = 48
_MARGIN_TOP = 16
_MARGIN_RIGHT = 16
_RAMP_LOW = (0xF7, 0xF7, 0xF7)
_RAMP_HIGH = (0x08, 0x51, 0x9C)


def format_quantity(value: float) -> str:
    """Grid values and weights: integral floats as bare integers, the rest
    in shortest round-trip form (grids are materialized as exact decimals,
    so this prints 0.3, never 0.30000000000000004)."""
    if value == int(value):
        return str(int(value))
    return repr(value)


def format_mu(value: Fraction) -> str:
    """12 significant digits; exact 0 and 1 print as themselves."""
    if value == 0:
        return "0"
    if value == 1:
        return "1"
    return f"{float(value):.12g}"


def surface_to_csv(surface: Surface) -> str:
    lines = ["delta,xi,mu"]
    for d, delta in enumerate(surface.delta_grid):
        for x, xi in enumerate(surface.xi_grid):
            lines.append(
                f"{format_quantity(delta)},{format_quantity(xi)},{format_mu(surface.mu[d][x])}"
            )
    return "\n".join(lines) + "\n"


def surface_to_json_dict(surface: Surface) -> dict:
    meta = surface.meta
    payload: dict = {
        "network": {
            "label": meta.network,
            "nodes": meta.node_count,
            "arcs": meta.arc_count,
            "k_bar": meta.k_bar,
        },
        "gamma": list(meta.gammas),
        "theta": [float(t) for t in meta.thetas],
        "theta_exact": [str(t) for t in meta.thetas],
        "strategy": meta.strategy.value,
        "delta_grid": list(surface.delta_grid),
        "xi_grid": list(surface.xi_grid),
        "totals": {str(k): surface.totals[k] for k in sorted(surface.totals)},
        "mu": [[float(v) for v in row] for row in surface.mu],
        "mu_exact": [[str(v) for v in row] for row in surface.mu],
    }
    if surface.per_k is not None:
        payload["per_k"] = [[list(cell) for cell in row] for row in surface.per_k]
    return payload


def surface_to_json(surface: Surface) -> str:
    return json.dumps(surface_to_json_dict(surface), indent=2) + "\n"


def surface_from_json(text: str) -> Surface:
    """Rebuild a surface from its JSON emission. Exact: rational strings,
    not the float column, feed the resilience matrix."""
    payload = json.loads(text)
    net = payload["network"]
    meta = SurfaceMeta(
        network=net["label"],
        node_count=net["nodes"],
        arc_count=net["arcs"],
        k_bar=net["k_bar"],
        gammas=tuple(float(g) for g in payload["gamma"]),
        thetas=tuple(Fraction(t) for t in payload["theta_exact"]),
        strategy=PcStrategy.from_token(payload["strategy"]),
    )
    totals: Mapping[int, int] = {int(k): v for k, v in payload["totals"].items()}
    per_k = None
    if "per_k" in payload:
        per_k = tuple(tuple(tuple(cell) for cell in row) for row in payload["per_k"])
    return Surface(
        delta_grid=tuple(float(d) for d in payload["delta_grid"]),
        xi_grid=tuple(float(x) for x in payload["xi_grid"]),
        mu=tuple(tuple(Fraction(v) for v in row) for row in payload["mu_exact"]),
        meta=meta,
        totals=totals,
        per_k=per_k,
    )


def _ramp(value: Fraction) -> str:
    t = float(value)
    channels = (round(lo + (hi - lo) * t) for lo, hi in zip(_RAMP_LOW, _RAMP_HIGH))
    return "#{:02x}{:02x}{:02x}".format(*channels)


def surface_to_svg(surface: Surface) -> str:
    n_delta = len(surface.delta_grid)
    n_xi = len(surface.xi_grid)
    width = _MARGIN_LEFT + n_delta * _CELL + _MARGIN_RIGHT
    height = _MARGIN_TOP + n_xi * _CELL + _MARGIN_BOTTOM
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for d in range(n_delta):
        for x in range(n_xi):
            px = _MARGIN_LEFT + d * _CELL
            # xi increases upward: row 0 sits at the bottom of the panel.
            py = _MARGIN_TOP + (n_xi - 1 - x) * _CELL
            parts.append(
                f'<rect x="{px}" y="{py}" width="{_CELL}" height="{_CELL}" '
                f'fill="{_ramp(surface.mu[d][x])}"/>'
            )
    label_style = 'font-family="sans-serif" font-size="12" fill="#333333"'
    for d, delta in enumerate(surface.delta_grid):
        cx = _MARGIN_LEFT + d * _CELL + _CELL // 2
        ty = _MARGIN_TOP + n_xi * _CELL + 16
        parts.append(
            f'<text x="{cx}" y="{ty}" text-anchor="middle" {label_style}>'
            f"{format_quantity(delta)}</text>"
        )
    for x, xi in enumerate(surface.xi_grid):
        cy = _MARGIN_TOP + (n_xi - 1 - x) * _CELL + _CELL // 2 + 4
        tx = _MARGIN_LEFT - 8
        parts.append(
            f'<text x="{tx}" y="{cy}" text-anchor="end" {label_style}>'
            f"{format_quantity(xi)}</text>"
        )
    axis_style = 'font-family="sans-serif" font-size="13" fill="#000000"'
    mid_x = _MARGIN_LEFT + (n_delta * _CELL) // 2
    parts.append(
        f'<text x="{mid_x}" y="{height - 12}" text-anchor="middle" {axis_style}>delta</text>'
    )
    mid_y = _MARGIN_TOP + (n_xi * _CELL) // 2
    parts.append(
        f'<text x="16" y="{mid_y}" text-anchor="middle" {axis_style} '
        f'transform="rotate(-90 16 {mid_y})">xi</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
