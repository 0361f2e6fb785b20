"""Scalar calculus for two-value annotated evidence.

An annotation is a pair of evidence degrees (mu, lam) in the unit square.
The functions here project it onto certainty/contradiction lattice axes,
discount the contradiction to recover a real certainty degree, rescale
everything back into [0, 1], and threshold the result into a three-state
decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance for internal identity checks (e.g. lattice-center
# membership). Never used to round outputs.
EPS_NUM = 1e-12


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be within [0, 1], got {value!r}")


@dataclass(frozen=True)
class EvidencePair:
    """Annotation of a proposition: favorable and unfavorable evidence.

    Both degrees live in [0, 1] and are independent; (1, 1) is a valid,
    fully contradictory annotation.
    """

    mu: float
    lam: float

    def __post_init__(self) -> None:
        _check_unit("mu", self.mu)
        _check_unit("lam", self.lam)


@dataclass(frozen=True)
class ControlFactor:
    """Certainty control factor: decision threshold and region-shape knob."""

    ftc: float = 0.5

    def __post_init__(self) -> None:
        _check_unit("ftc", self.ftc)


def as_control(value: ControlFactor | float) -> ControlFactor:
    """Coerce a bare float into a validated ControlFactor."""
    if isinstance(value, ControlFactor):
        return value
    return ControlFactor(float(value))


@dataclass(frozen=True)
class LatticePoint:
    """Certainty degree dc and contradiction degree dct, both in [-1, 1]."""

    dc: float
    dct: float

    def __post_init__(self) -> None:
        if not -1.0 <= self.dc <= 1.0:
            raise ValueError(f"dc must be within [-1, 1], got {self.dc!r}")
        if not -1.0 <= self.dct <= 1.0:
            raise ValueError(f"dct must be within [-1, 1], got {self.dct!r}")


def complement_evidence(mu2: float) -> float:
    """Unfavorable evidence degree obtained from a second favorable source."""
    _check_unit("mu2", mu2)
    return 1.0 - mu2


def lattice_map(pair: EvidencePair) -> LatticePoint:
    """Project an evidence pair onto the lattice: dc = mu - lam, dct = mu + lam - 1."""
    return LatticePoint(dc=pair.mu - pair.lam, dct=pair.mu + pair.lam - 1.0)


def certainty_interval(dct: float) -> float:
    """Certainty range left unconstrained by the contradiction degree: 1 - |dct|."""
    if not -1.0 <= dct <= 1.0:
        raise ValueError(f"dct must be within [-1, 1], got {dct!r}")
    return 1.0 - abs(dct)


def certainty_recovery(point: LatticePoint) -> tuple[float, float, float]:
    """Discount contradiction from the certainty degree.

    Returns (d, D, dcr): the distance from the point to the nearest certainty
    vertex, that distance limited to 1, and the real certainty degree, which
    keeps the sign of dc and is 0 when dc is 0.
    """
    d = math.sqrt((1.0 - abs(point.dc)) ** 2 + point.dct**2)
    limited = min(d, 1.0)
    if point.dc > 0.0:
        dcr = 1.0 - limited
    elif point.dc < 0.0:
        dcr = limited - 1.0
    else:
        dcr = 0.0
    return d, limited, dcr


def normalize_outputs(point: LatticePoint, dcr: float) -> tuple[float, float, float, float]:
    """Rescale lattice degrees into [0, 1].

    Returns (muE, muECT, muER, phiE): resulting evidence degree, resulting
    contradiction degree, real resulting evidence degree, and the normalized
    certainty interval.
    """
    muE = (point.dc + 1.0) / 2.0
    muECT = (point.dct + 1.0) / 2.0
    muER = (dcr + 1.0) / 2.0
    phiE = 1.0 - abs(2.0 * muECT - 1.0)
    return muE, muECT, muER, phiE


def decide(muER: float, ftc: ControlFactor | float = ControlFactor()) -> float:
    """Three-state decision: 1.0 above the control factor, 0.0 below, 0.5 at it.

    The tie branch is an exact comparison on purpose. The middle state means
    the analysis is undefined (hold the current decision), and widening it
    into an epsilon band would change behavior at documented operating
    points that land exactly on the threshold.
    """
    threshold = as_control(ftc).ftc
    if muER > threshold:
        return 1.0
    if muER < threshold:
        return 0.0
    return 0.5
