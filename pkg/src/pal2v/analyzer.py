"""Lattice region classification.

The unit lattice splits into four extreme wedges (true, false, inconsistent,
paracomplete), eight inner quasi-states, and the exact center. Wedge size is
parametrized by the control factor, so classification is total and assigns
every point exactly one region.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .core import EPS_NUM, ControlFactor, LatticePoint, as_control


@unique
class RegionLabel(Enum):
    """The 13 logical states, declared in serialization order.

    Each member carries an ASCII alias (used in text and JSON output) and a
    Unicode rendering; T and l stand in for the top and bottom symbols.
    """

    TRUE = ("t", "t")
    FALSE = ("f", "F")
    INCONSISTENT = ("T", "⊤")
    PARACOMPLETE = ("l", "⊥")
    QUASI_INCONSISTENT_TO_TRUE = ("QT-t", "Q⊤→t")
    QUASI_INCONSISTENT_TO_FALSE = ("QT-f", "Q⊤→F")
    QUASI_TRUE_TO_INCONSISTENT = ("Qt-T", "Qt→⊤")
    QUASI_FALSE_TO_INCONSISTENT = ("Qf-T", "QF→⊤")
    QUASI_TRUE_TO_PARACOMPLETE = ("Qt-l", "Qt→⊥")
    QUASI_FALSE_TO_PARACOMPLETE = ("Qf-l", "QF→⊥")
    QUASI_PARACOMPLETE_TO_TRUE = ("Ql-t", "Q⊥→t")
    QUASI_PARACOMPLETE_TO_FALSE = ("Ql-f", "Q⊥→F")
    UNDEFINED = ("I", "I")

    @property
    def ascii(self) -> str:
        return self.value[0]

    @property
    def unicode(self) -> str:
        return self.value[1]

    @classmethod
    def from_ascii(cls, alias: str) -> "RegionLabel":
        for label in cls:
            if label.ascii == alias:
                return label
        raise ValueError(f"unknown region alias {alias!r}")


@dataclass(frozen=True)
class RegionGeometry:
    """Extreme-wedge thresholds derived from the control factor.

    vcc bounds the true/false wedges along the certainty axis and equals the
    control factor; vct bounds the inconsistent/paracomplete wedges along the
    contradiction axis and is its complement, so vcc + vct == 1 always.
    """

    vcc: float
    vct: float

    @classmethod
    def from_control(cls, ftc: ControlFactor | float) -> "RegionGeometry":
        value = as_control(ftc).ftc
        return cls(vcc=value, vct=1.0 - value)


def classify(point: LatticePoint, ftc: ControlFactor | float = ControlFactor()) -> RegionLabel:
    """Assign a lattice point to exactly one region.

    Precedence: the exact center first, then the four extreme wedges (closed
    boundaries, so a point sitting on a threshold belongs to the extreme
    state), then the inner quadrants split by whichever axis dominates. The
    |dct| == |dc| diagonal stays with the certainty-dominant family.
    """
    geometry = RegionGeometry.from_control(ftc)
    dc, dct = point.dc, point.dct

    if abs(dc) <= EPS_NUM and abs(dct) <= EPS_NUM:
        return RegionLabel.UNDEFINED
    if dc >= geometry.vcc:
        return RegionLabel.TRUE
    if dc <= -geometry.vcc:
        return RegionLabel.FALSE
    if dct >= geometry.vct:
        return RegionLabel.INCONSISTENT
    if dct <= -geometry.vct:
        return RegionLabel.PARACOMPLETE

    if abs(dct) > abs(dc):
        if dct >= 0.0:
            if dc >= 0.0:
                return RegionLabel.QUASI_INCONSISTENT_TO_TRUE
            return RegionLabel.QUASI_INCONSISTENT_TO_FALSE
        if dc >= 0.0:
            return RegionLabel.QUASI_PARACOMPLETE_TO_TRUE
        return RegionLabel.QUASI_PARACOMPLETE_TO_FALSE

    if dc >= 0.0:
        if dct >= 0.0:
            return RegionLabel.QUASI_TRUE_TO_INCONSISTENT
        return RegionLabel.QUASI_TRUE_TO_PARACOMPLETE
    if dct >= 0.0:
        return RegionLabel.QUASI_FALSE_TO_INCONSISTENT
    return RegionLabel.QUASI_FALSE_TO_PARACOMPLETE


def region_flags(
    point: LatticePoint, ftc: ControlFactor | float = ControlFactor()
) -> dict[RegionLabel, bool]:
    """One flag per region, all false except the classified one."""
    hit = classify(point, ftc)
    return {label: label is hit for label in RegionLabel}
