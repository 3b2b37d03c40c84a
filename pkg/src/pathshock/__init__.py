"""Path-based shock-propagation resilience for weighted directed networks.

Parse an edge list, enumerate its simple paths, push discounted shocks
along them against per-step thresholds, and aggregate the surviving
fractions into a resilience value in [0, 1], pointwise or over a whole
(delta, xi) parameter grid.
"""

from .graph import (
    Arc,
    EdgeListError,
    EmptyInputError,
    EmptySubnetworkError,
    Network,
    ValidationReport,
    parse_edge_list,
    parse_node_set,
    subnetwork,
)
from .paths import PathRecord, PathStats, enumerate_paths, merge_path_stats, path_stats
from .propagation import (
    DEFAULT_STRATEGY,
    GAMMA_PRESETS,
    PcStrategy,
    PcVector,
    Shock,
    ShockTrace,
    gamma_preset,
    is_pc,
    shock_trace,
)
from .resilience import (
    DEFAULT_DELTA_GRID,
    DEFAULT_XI_GRID,
    THETA_PRESETS,
    PcCensus,
    Surface,
    SurfaceMeta,
    ThetaVector,
    critical_xi,
    mu,
    pc_census,
    sweep,
    theta_preset,
)
from .output import (
    format_mu,
    format_quantity,
    surface_from_json,
    surface_to_csv,
    surface_to_json,
    surface_to_json_dict,
    surface_to_svg,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "DEFAULT_DELTA_GRID",
    "DEFAULT_STRATEGY",
    "DEFAULT_XI_GRID",
    "EdgeListError",
    "EmptyInputError",
    "EmptySubnetworkError",
    "GAMMA_PRESETS",
    "Network",
    "PathRecord",
    "PathStats",
    "PcCensus",
    "PcStrategy",
    "PcVector",
    "Shock",
    "ShockTrace",
    "Surface",
    "SurfaceMeta",
    "THETA_PRESETS",
    "ThetaVector",
    "ValidationReport",
    "critical_xi",
    "enumerate_paths",
    "format_mu",
    "format_quantity",
    "gamma_preset",
    "is_pc",
    "merge_path_stats",
    "mu",
    "parse_edge_list",
    "parse_node_set",
    "path_stats",
    "pc_census",
    "shock_trace",
    "subnetwork",
    "surface_from_json",
    "surface_to_csv",
    "surface_to_json",
    "surface_to_json_dict",
    "surface_to_svg",
    "sweep",
    "theta_preset",
    "__version__",
]
