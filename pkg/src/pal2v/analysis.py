"""Full analysis of one evidence pair: every output field in one shot."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .analyzer import RegionLabel, classify
from .core import (
    ControlFactor,
    EvidencePair,
    LatticePoint,
    as_control,
    certainty_interval,
    certainty_recovery,
    decide,
    lattice_map,
    normalize_outputs,
)


@dataclass(frozen=True)
class AnalysisResult:
    """Complete output of a single analysis.

    Carries the inputs (pair, ftc), the lattice point, the vertex distance d
    with its limited form D, the real certainty degree dcr, the certainty
    intervals phi and phiE, the normalized degrees muE / muECT / muER, the
    three-state decision, the region label, and the full region flag map.
    """

    pair: EvidencePair
    ftc: ControlFactor
    point: LatticePoint
    d: float
    D: float
    dcr: float
    phi: float
    muE: float
    muECT: float
    muER: float
    phiE: float
    decision: float
    label: RegionLabel
    regions: Mapping[RegionLabel, bool]


def analyze(pair: EvidencePair, ftc: ControlFactor | float = ControlFactor()) -> AnalysisResult:
    """Run the whole pipeline on one evidence pair.

    Composes the lattice projection, certainty recovery, output
    normalization, decision and region classification; the result's regions
    map is all false except the entry matching its label.
    """
    control = as_control(ftc)
    point = lattice_map(pair)
    d, limited, dcr = certainty_recovery(point)
    phi = certainty_interval(point.dct)
    muE, muECT, muER, phiE = normalize_outputs(point, dcr)
    label = classify(point, control)
    return AnalysisResult(
        pair=pair,
        ftc=control,
        point=point,
        d=d,
        D=limited,
        dcr=dcr,
        phi=phi,
        muE=muE,
        muECT=muECT,
        muER=muER,
        phiE=phiE,
        decision=decide(muER, control),
        label=label,
        regions=MappingProxyType({entry: entry is label for entry in RegionLabel}),
    )
