"""Influence ranking over developer/project event networks.

The heavy lifting lives in the compiled ``devrank._core`` extension; this
package re-exports its public surface.
"""

from ._core import (
    Event,
    EventLog,
    GroundTruth,
    HeteroNetwork,
    ParseError,
    RankState,
    __version__,
    build_network,
    compute_ground_truth,
    generate_events,
    load_event_log,
    pearson_top_k,
    precision_at_k,
    run,
    snapshot,
    write_event_files,
)

__all__ = [
    "Event",
    "EventLog",
    "GroundTruth",
    "HeteroNetwork",
    "ParseError",
    "RankState",
    "__version__",
    "build_network",
    "compute_ground_truth",
    "generate_events",
    "load_event_log",
    "pearson_top_k",
    "precision_at_k",
    "run",
    "snapshot",
    "write_event_files",
]
