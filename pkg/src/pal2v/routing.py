"""Best-route selection from five link metrics.

The metrics are calibrated into five evidence degrees and fused through a
four-node analysis network whose final muER acts as the route indicator:
above the control factor selects route A, below selects route B, exactly at
it keeps the current route.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import ControlFactor, as_control
from .graph import PanGraph, Ref


@dataclass(frozen=True)
class RouteMetrics:
    """Link quality measurements for one candidate route."""

    rxj_ms: float  # reception jitter
    txj_ms: float  # transmission jitter
    rtt_ms: float  # round-trip time
    pc_pct: float  # router processing consumption, percent
    pl_pct: float  # packet loss, percent

    def __post_init__(self) -> None:
        for name in ("rxj_ms", "txj_ms", "rtt_ms"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be non-negative")
        for name in ("pc_pct", "pl_pct"):
            if not 0.0 <= getattr(self, name) <= 100.0:
                raise ValueError(f"{name} must be within [0, 100]")


class Route(Enum):
    A = "A"
    B = "B"
    KEEP_CURRENT = "keep-current"


@dataclass(frozen=True)
class RouteDecision:
    muER: float
    decision: float
    route: Route


def _clamp_unit(value: float) -> float:
    return 0.0 if value < 0.0 else 1.0 if value > 1.0 else value


def route_normalize(
    metrics: RouteMetrics, consistent_bounds: bool = False
) -> tuple[float, float, float, float, float]:
    """Calibrate the metrics into five evidence degrees, clamped into [0, 1].

    Returns (mu1, lam1, mu2, lam2, mu3): jitter evidence for and against,
    round-trip evidence, processing-consumption counter-evidence, and
    packet-delivery evidence.

    The default jitter calibration divides by (100 - 0.1) while subtracting
    an offset of 0.001; the mismatch is kept because the recorded route
    transcripts depend on these exact constants. consistent_bounds switches
    the divisor to (100 - 0.001) so both jitter bounds agree.
    """
    jitter_span = (100.0 - 0.001) if consistent_bounds else (100.0 - 0.1)
    mu1 = 1.0 - (metrics.rxj_ms - 0.001) / jitter_span
    lam1 = (metrics.txj_ms - 0.001) / jitter_span
    mu2 = 1.0 - (metrics.rtt_ms - 0.001) / (200.0 - 0.001)
    lam2 = metrics.pc_pct / 100.0
    mu3 = 1.0 - metrics.pl_pct / 100.0
    return tuple(_clamp_unit(v) for v in (mu1, lam1, mu2, lam2, mu3))


def build_route_graph(
    evidence: tuple[float, float, float, float, float],
    ftc: ControlFactor | float = 0.5,
) -> PanGraph:
    """Wire the four-node selection network.

    PAN1 fuses the jitter pair and PAN2 the round-trip/consumption pair;
    PAN3 weighs packet delivery against PAN1's output, and PAN4 arbitrates
    PAN3 against PAN2. The graph's designated output is PAN4.
    """
    mu1, lam1, mu2, lam2, mu3 = evidence
    control = as_control(ftc)
    graph = PanGraph()
    for node_id in ("PAN1", "PAN2", "PAN3", "PAN4"):
        graph.add_node(control, node_id)
    graph.bind("PAN1", "mu", mu1)
    graph.bind("PAN1", "lam", lam1)
    graph.bind("PAN2", "mu", mu2)
    graph.bind("PAN2", "lam", lam2)
    graph.bind("PAN3", "mu", mu3)
    graph.bind("PAN3", "lam", Ref("PAN1", "muER"))
    graph.bind("PAN4", "mu", Ref("PAN3", "muER"))
    graph.bind("PAN4", "lam", Ref("PAN2", "muER"))
    graph.output = "PAN4"
    return graph


def select_route(
    metrics: RouteMetrics,
    ftc: ControlFactor | float = 0.5,
    consistent_bounds: bool = False,
) -> RouteDecision:
    """Run the selection network on one set of metrics."""
    evidence = route_normalize(metrics, consistent_bounds)
    graph = build_route_graph(evidence, ftc)
    final = graph.evaluate()[graph.output]
    route = {1.0: Route.A, 0.0: Route.B, 0.5: Route.KEEP_CURRENT}[final.decision]
    return RouteDecision(muER=final.muER, decision=final.decision, route=route)
