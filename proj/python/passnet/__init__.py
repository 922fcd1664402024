"""Temporal pass-network analysis.

Thin wrapper over the compiled _core module: pass-log parsing, sliding-window
graph construction, network metrics, and a possession simulator.
"""

from ._core import (
    ZONE_COUNT,
    CentralityRow,
    ChainStats,
    MatchLog,
    MetricPoint,
    MetricSeries,
    ParseError,
    PassChain,
    PassEvent,
    PassGraph,
    PlayerGraph,
    Position,
    Roster,
    RosterEntry,
    SimConfig,
    Window,
    ZoneScheme,
    __version__,
    assign,
    avg_chain_length,
    build_graph,
    centrality,
    clustering_rate,
    collapse_zones,
    density,
    export_dot,
    export_json,
    extract_chains,
    group_events,
    parse_log,
    parse_log_lenient,
    parse_roster,
    parse_sim_config,
    passes_per_minute,
    scenario,
    serialize_log,
    series,
    simulate,
    simulate_detailed,
    to_global,
    validate,
    validate_config,
    windows,
    write_sim_config,
)

__all__ = [
    "ZONE_COUNT",
    "CentralityRow",
    "ChainStats",
    "MatchLog",
    "MetricPoint",
    "MetricSeries",
    "ParseError",
    "PassChain",
    "PassEvent",
    "PassGraph",
    "PlayerGraph",
    "Position",
    "Roster",
    "RosterEntry",
    "SimConfig",
    "Window",
    "ZoneScheme",
    "__version__",
    "assign",
    "avg_chain_length",
    "build_graph",
    "centrality",
    "clustering_rate",
    "collapse_zones",
    "density",
    "export_dot",
    "export_json",
    "extract_chains",
    "group_events",
    "parse_log",
    "parse_log_lenient",
    "parse_roster",
    "parse_sim_config",
    "passes_per_minute",
    "scenario",
    "serialize_log",
    "series",
    "simulate",
    "simulate_detailed",
    "to_global",
    "validate",
    "validate_config",
    "windows",
    "write_sim_config",
]
