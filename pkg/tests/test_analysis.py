"""The composed analysis pipeline."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pal2v import analysis
from pal2v.analyzer import RegionLabel, classify, region_flags
from pal2v.core import (
    ControlFactor,
    EvidencePair,
    certainty_interval,
    certainty_recovery,
    decide,
    lattice_map,
    normalize_outputs,
)

UNIT = st.floats(min_value=0.0, max_value=1.0)


class TestKnownAnalyses:
    def test_reference_pair(self):
        result = analysis.analyze(EvidencePair(0.70, 0.60))
        assert result.point.dc == pytest.approx(0.1, abs=1e-12)
        assert result.point.dct == pytest.approx(0.3, abs=1e-12)
        assert result.d == pytest.approx(0.9486832980505138, abs=1e-12)
        assert result.D == pytest.approx(result.d, abs=1e-12)
        assert result.dcr == pytest.approx(0.05131670194948623, abs=1e-12)
        assert result.phi == pytest.approx(0.7, abs=1e-12)
        assert result.phiE == pytest.approx(0.7, abs=1e-12)
        assert result.muE == pytest.approx(0.55, abs=1e-12)
        assert result.muECT == pytest.approx(0.65, abs=1e-12)
        assert result.muER == pytest.approx(0.5256583509747431, abs=1e-12)
        assert result.decision == 1.0
        assert result.label is RegionLabel.QUASI_INCONSISTENT_TO_TRUE

    def test_high_certainty_pair(self):
        result = analysis.analyze(EvidencePair(0.8, 0.5))
        assert result.muER == pytest.approx(0.6192113447, abs=1e-9)
        assert result.decision == 1.0

    def test_balanced_pair_is_undefined(self):
        result = analysis.analyze(EvidencePair(0.5, 0.5))
        assert result.muER == 0.5
        assert result.decision == 0.5
        assert result.label is RegionLabel.UNDEFINED

    def test_inputs_are_carried_on_the_result(self):
        pair = EvidencePair(0.3, 0.9)
        result = analysis.analyze(pair, 0.7)
        assert result.pair is pair
        assert result.ftc == ControlFactor(0.7)

    def test_accepts_bare_ftc_floats(self):
        assert analysis.analyze(EvidencePair(0.9, 0.1), 0.9).decision == 0.5


class TestCompositionality:
    @settings(max_examples=300)
    @given(UNIT, UNIT, UNIT)
    def test_matches_the_component_operations(self, mu, lam, ftc):
        """analyze equals the hand-composed pipeline, field by field."""
        pair = EvidencePair(mu, lam)
        result = analysis.analyze(pair, ftc)
        point = lattice_map(pair)
        d, limited, dcr = certainty_recovery(point)
        muE, muECT, muER, phiE = normalize_outputs(point, dcr)
        assert result.point == point
        assert result.d == d
        assert result.D == limited
        assert result.dcr == dcr
        assert result.phi == certainty_interval(point.dct)
        assert (result.muE, result.muECT, result.muER, result.phiE) == (
            muE, muECT, muER, phiE,
        )
        assert result.decision == decide(muER, ftc)
        assert result.label is classify(point, ftc)
        assert dict(result.regions) == region_flags(point, ftc)

    @given(UNIT, UNIT)
    def test_exactly_one_region_flag(self, mu, lam):
        """The result's region map marks its label and nothing else."""
        result = analysis.analyze(EvidencePair(mu, lam))
        assert sum(result.regions.values()) == 1
        assert result.regions[result.label] is True
