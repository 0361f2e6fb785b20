"""Attribute-style analysis blocks over the pal2v engine.

A ParaconsistentBlock bundles a control setting (config), an evidence pair
(input) and the full set of analysis outputs (complete). Outputs recompute
on every read, so they always reflect the current inputs, and
print_complete() prints the same listing the pal2v CLI renders.
"""

from __future__ import annotations

import sys
from typing import Any

from pal2v import ControlFactor, EvidencePair, analyze, build_document, render_document

__all__ = ["ParaconsistentBlock"]
__version__ = "0.1.0"


def _checked(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be within [0, 1], got {value!r}")
    return value


class _Config:
    """Analysis settings; FtC defaults to 0.5."""

    __slots__ = ("_ftc",)

    def __init__(self) -> None:
        self._ftc = 0.5

    @property
    def FtC(self) -> float:
        return self._ftc

    @FtC.setter
    def FtC(self, value: float) -> None:
        self._ftc = _checked("FtC", value)


class _Input:
    """Evidence pair; both degrees default to 0.5."""

    __slots__ = ("_mu", "_lam")

    def __init__(self) -> None:
        self._mu = 0.5
        self._lam = 0.5

    @property
    def mu(self) -> float:
        return self._mu

    @mu.setter
    def mu(self, value: float) -> None:
        self._mu = _checked("mu", value)

    @property
    def lam(self) -> float:
        return self._lam

    @lam.setter
    def lam(self, value: float) -> None:
        self._lam = _checked("lam", value)


class _Complete:
    """Read-only output view; every field recomputes from the live inputs."""

    __slots__ = ("_block",)

    def __init__(self, block: "ParaconsistentBlock") -> None:
        self._block = block

    def __getattr__(self, name: str) -> Any:
        if name.startswith("_"):
            raise AttributeError(name)
        document = self._block._document()
        try:
            return document[name]
        except KeyError:
            raise AttributeError(f"no output field {name!r}") from None

    def __dir__(self):
        return sorted(set(super().__dir__()) | set(self._block._document()))


class ParaconsistentBlock:
    """One analysis block.

    Set config.FtC and the input evidence, then read any output field from
    complete (muER, label, regions, ...) or print the whole listing.
    """

    __slots__ = ("config", "input", "complete")

    def __init__(self) -> None:
        self.config = _Config()
        self.input = _Input()
        self.complete = _Complete(self)

    def _document(self) -> dict[str, Any]:
        result = analyze(
            EvidencePair(self.input.mu, self.input.lam),
            ControlFactor(self.config.FtC),
        )
        return build_document(result)

    def print_complete(self) -> None:
        """Print the full output listing for the current inputs."""
        sys.stdout.write(render_document(self._document()))
