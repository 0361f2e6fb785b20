"""Contradiction extraction over a one-dimensional dataset.

Raw samples are min-max normalized into evidence space, then repeatedly
fused: each pass takes the running extremes, analyzes them as an evidence
pair, replaces them with the fused muER, and shrinks the dataset by one
value until a single representative remains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .analysis import analyze
from .core import ControlFactor, EvidencePair

# Value-match tolerance when deleting the extremes that fed a fusion step.
EPS_REMOVE = 1e-9


@dataclass(frozen=True)
class NormalizedDataset:
    """Unit-interval view of a raw sample list plus the bounds to undo it."""

    values: tuple[float, ...]
    min_raw: float
    max_raw: float


def normalize_dataset(raw: Sequence[float]) -> NormalizedDataset:
    """Min-max rescale into [0, 1]; a constant dataset maps to all ones."""
    values = [float(v) for v in raw]
    if not values:
        raise ValueError("cannot normalize an empty dataset")
    lo, hi = min(values), max(values)
    if hi == lo:
        return NormalizedDataset((1.0,) * len(values), lo, hi)
    span = hi - lo
    return NormalizedDataset(tuple((v - lo) / span for v in values), lo, hi)


def _pop_first_match(values: list[float], target: float) -> None:
    for index, value in enumerate(values):
        if abs(value - target) <= EPS_REMOVE:
            del values[index]
            return
    raise AssertionError("extreme value vanished from the working dataset")


def reduce(
    values: Sequence[float],
    ftc: ControlFactor | float = 0.5,
    raw_min_lambda: bool = False,
) -> float:
    """Fuse extremes until one value remains and return it.

    Each pass takes the maximum as favorable evidence and the complement of
    the minimum as unfavorable evidence, fuses them, removes one instance of
    each extreme (first match within EPS_REMOVE, maximum first) and appends
    the fused muER, so the dataset shrinks by exactly one per pass.

    ftc cannot influence the fused value (it only gates decisions, which the
    reducer never reads); it is accepted for signature symmetry with the
    rest of the package. raw_min_lambda feeds the plain minimum as
    unfavorable evidence instead of its complement, a variant that does not
    reproduce the reference results and stays off by default.
    """
    working = [float(v) for v in values]
    if not working:
        raise ValueError("cannot reduce an empty dataset")
    for value in working:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"reduce expects values within [0, 1], got {value!r}")

    while len(working) > 1:
        mu = max(working)
        lo = min(working)
        lam = lo if raw_min_lambda else 1.0 - lo
        fused = analyze(EvidencePair(mu, lam), ftc).muER
        _pop_first_match(working, mu)
        _pop_first_match(working, lo)
        working.append(fused)
    return working[0]


def denormalize(muER: float, min_raw: float, max_raw: float) -> float:
    """Map a unit-interval value back into source units."""
    return min_raw + muER * (max_raw - min_raw)
