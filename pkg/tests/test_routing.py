"""Metric calibration and the four-node route selection network."""

import pytest

from pal2v.analysis import analyze
from pal2v.core import EvidencePair
from pal2v.routing import (
    Route,
    RouteMetrics,
    build_route_graph,
    route_normalize,
    select_route,
)

CASE_A = RouteMetrics(40.0, 60.0, 50.0, 70.0, 20.0)
CASE_KEEP = RouteMetrics(10.0, 20.0, 20.0, 95.0, 20.0)
CASE_B = RouteMetrics(20.0, 30.0, 40.0, 60.0, 40.0)


class TestMetricsValidation:
    def test_accepts_reference_cases(self):
        for metrics in (CASE_A, CASE_KEEP, CASE_B):
            assert metrics.rtt_ms >= 0.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"rxj_ms": -1.0},
            {"txj_ms": -0.5},
            {"rtt_ms": -10.0},
            {"pc_pct": 150.0},
            {"pc_pct": -5.0},
            {"pl_pct": 101.0},
        ],
    )
    def test_rejects_out_of_range(self, kwargs):
        base = dict(rxj_ms=1.0, txj_ms=1.0, rtt_ms=1.0, pc_pct=0.0, pl_pct=0.0)
        base.update(kwargs)
        with pytest.raises(ValueError):
            RouteMetrics(**base)


class TestCalibration:
    def test_reference_case(self):
        mu1, lam1, mu2, lam2, mu3 = route_normalize(CASE_A)
        assert mu1 == pytest.approx(0.59961, abs=5e-5)
        assert lam1 == pytest.approx(0.60059, abs=5e-5)
        assert mu2 == pytest.approx(0.75, abs=5e-5)
        assert lam2 == pytest.approx(0.70, abs=1e-12)
        assert mu3 == pytest.approx(0.80, abs=1e-12)

    def test_ideal_metrics_calibrate_to_extremes(self):
        evidence = route_normalize(RouteMetrics(0.001, 0.001, 0.001, 0.0, 0.0))
        assert evidence == pytest.approx((1.0, 0.0, 1.0, 0.0, 1.0), abs=1e-12)

    def test_saturated_metrics_are_clamped(self):
        evidence = route_normalize(RouteMetrics(150.0, 150.0, 300.0, 100.0, 100.0))
        assert evidence == (0.0, 1.0, 0.0, 1.0, 0.0)

    def test_consistent_bounds_variant_changes_the_jitter_pair(self):
        default = route_normalize(CASE_A)
        variant = route_normalize(CASE_A, consistent_bounds=True)
        assert variant[0] != default[0]
        assert variant[1] != default[1]
        assert variant[2:] == default[2:]
        assert variant[0] == pytest.approx(1.0 - (40.0 - 0.001) / 99.999, abs=1e-12)


class TestRouteGraph:
    def test_topology_matches_a_hand_evaluation(self):
        evidence = route_normalize(CASE_A)
        mu1, lam1, mu2, lam2, mu3 = evidence
        results = build_route_graph(evidence).evaluate()
        pan1 = analyze(EvidencePair(mu1, lam1))
        pan2 = analyze(EvidencePair(mu2, lam2))
        pan3 = analyze(EvidencePair(mu3, pan1.muER))
        pan4 = analyze(EvidencePair(pan3.muER, pan2.muER))
        assert results["PAN1"] == pan1
        assert results["PAN2"] == pan2
        assert results["PAN3"] == pan3
        assert results["PAN4"] == pan4

    def test_output_node_is_the_arbiter(self):
        graph = build_route_graph(route_normalize(CASE_A))
        assert graph.output == "PAN4"


class TestSelectRoute:
    def test_case_toward_a(self):
        decision = select_route(CASE_A)
        assert decision.muER == pytest.approx(0.556, abs=5e-4)
        assert decision.decision == 1.0
        assert decision.route is Route.A

    def test_case_keeps_current(self):
        decision = select_route(CASE_KEEP)
        assert decision.muER == 0.5
        assert decision.decision == 0.5
        assert decision.route is Route.KEEP_CURRENT

    def test_case_toward_b(self):
        decision = select_route(CASE_B)
        assert decision.muER == pytest.approx(0.454, abs=5e-4)
        assert decision.decision == 0.0
        assert decision.route is Route.B

    def test_ideal_metrics_pin_the_network_asymmetry(self):
        # The second-stage wiring feeds strong upstream certainty into the
        # unfavorable ports, so fully ideal metrics land below the threshold
        # and fully saturated metrics land above it, (1 - x)-symmetrically.
        ideal = select_route(RouteMetrics(0.001, 0.001, 0.001, 0.0, 0.0))
        worst = select_route(RouteMetrics(150.0, 150.0, 300.0, 100.0, 100.0))
        assert ideal.muER == pytest.approx(0.3535533906, abs=1e-9)
        assert ideal.route is Route.B
        assert worst.muER == pytest.approx(1.0 - ideal.muER, abs=1e-12)
        assert worst.route is Route.A

    def test_control_factor_moves_the_decision(self):
        decision = select_route(CASE_A, ftc=0.6)
        assert decision.muER == pytest.approx(0.556, abs=5e-4)
        assert decision.decision == 0.0
        assert decision.route is Route.B
