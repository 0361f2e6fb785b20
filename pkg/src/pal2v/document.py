"""Name-faithful output document for one analysis.

The document maps the canonical field names (mu, lam, FtC, dc, dct, d, D,
dcr, phi, phiE, muE, muECT, muER, decision_output, label, regions) onto the
values of an AnalysisResult, and renders the text listing the way the
reference transcripts print it: keys in ASCII-sorted order, floats with four
decimals, the region map as a dict literal.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .analysis import AnalysisResult

# Text-listing keys, in the order the listing prints them (ASCII sort of the
# display names; the region map displays under "Regions"). The listing shows
# phiE but not phi; phi stays available in the document and the JSON form.
_TEXT_KEYS = (
    "D",
    "FtC",
    "Regions",
    "d",
    "dc",
    "dcr",
    "dct",
    "decision_output",
    "label",
    "lam",
    "mu",
    "muE",
    "muECT",
    "muER",
    "phiE",
)


def build_document(result: AnalysisResult) -> dict[str, Any]:
    """Full-precision mapping of one analysis onto the canonical field names.

    label holds the ASCII alias; label_unicode carries the symbolic form for
    consumers that want it. Region flags are keyed by ASCII alias, in
    declaration order.
    """
    return {
        "mu": result.pair.mu,
        "lam": result.pair.lam,
        "FtC": result.ftc.ftc,
        "dc": result.point.dc,
        "dct": result.point.dct,
        "d": result.d,
        "D": result.D,
        "dcr": result.dcr,
        "phi": result.phi,
        "phiE": result.phiE,
        "muE": result.muE,
        "muECT": result.muECT,
        "muER": result.muER,
        "decision_output": result.decision,
        "label": result.label.ascii,
        "label_unicode": result.label.unicode,
        "regions": {label.ascii: flag for label, flag in result.regions.items()},
    }


def render_document(doc: Mapping[str, Any]) -> str:
    """Render the text listing for a document.

    Works on anything mapping-shaped with the canonical keys, including a
    document parsed back from its JSON form, and reproduces the original
    text byte for byte.
    """
    lines = []
    for key in _TEXT_KEYS:
        if key == "Regions":
            flags = ", ".join(f"'{name}': {bool(flag)}" for name, flag in doc["regions"].items())
            lines.append(f"Regions: {{{flags}}}")
        elif key == "label":
            lines.append(f"label: {doc['label']}")
        else:
            lines.append(f"{key}: {float(doc[key]):.4f}")
    return "\n".join(lines) + "\n"


def document_json(doc: Mapping[str, Any]) -> str:
    """JSON form of a document, full precision, human-indented."""
    return json.dumps(doc, ensure_ascii=False, indent=2)
