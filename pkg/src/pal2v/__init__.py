"""Paraconsistent evidence analysis with two-value annotations.

The package turns (favorable, unfavorable) evidence pairs into certainty and
contradiction degrees, classifies them on a 13-region lattice, fuses whole
datasets down to a single contradiction-extracted value, composes analysis
nodes into feed-forward networks, and applies all of it to link-delay
estimation and best-route selection.
"""

__version__ = "0.1.0"

from .analysis import AnalysisResult, analyze
from .analyzer import RegionGeometry, RegionLabel, classify, region_flags
from .core import (
    EPS_NUM,
    ControlFactor,
    EvidencePair,
    LatticePoint,
    as_control,
    certainty_interval,
    certainty_recovery,
    complement_evidence,
    decide,
    lattice_map,
    normalize_outputs,
)
from .document import build_document, document_json, render_document
from .extractor import (
    EPS_REMOVE,
    NormalizedDataset,
    denormalize,
    normalize_dataset,
    reduce,
)
from .graph import (
    GraphCycleError,
    GraphError,
    PanGraph,
    PortSource,
    Ref,
    UnboundPortError,
    load_graph,
)
from .probing import (
    DelayEstimate,
    DelayProbeReport,
    IcmpProber,
    ProbeError,
    ProbeUnavailableError,
    ReplayProber,
    estimate_delay,
    probe_delays,
)
from .routing import (
    Route,
    RouteDecision,
    RouteMetrics,
    build_route_graph,
    route_normalize,
    select_route,
)

__all__ = [
    "AnalysisResult",
    "ControlFactor",
    "DelayEstimate",
    "DelayProbeReport",
    "EPS_NUM",
    "EPS_REMOVE",
    "EvidencePair",
    "GraphCycleError",
    "GraphError",
    "IcmpProber",
    "LatticePoint",
    "NormalizedDataset",
    "PanGraph",
    "PortSource",
    "ProbeError",
    "ProbeUnavailableError",
    "Ref",
    "RegionGeometry",
    "RegionLabel",
    "ReplayProber",
    "Route",
    "RouteDecision",
    "RouteMetrics",
    "UnboundPortError",
    "analyze",
    "as_control",
    "build_document",
    "build_route_graph",
    "certainty_interval",
    "certainty_recovery",
    "classify",
    "complement_evidence",
    "decide",
    "denormalize",
    "document_json",
    "estimate_delay",
    "lattice_map",
    "load_graph",
    "normalize_dataset",
    "normalize_outputs",
    "probe_delays",
    "reduce",
    "region_flags",
    "render_document",
    "route_normalize",
    "select_route",
]
