"""Feed-forward networks of analysis nodes.

Each node owns a control factor and two input ports (mu, lam). A port is
bound either to a constant in [0, 1] or to a reference at an upstream node's
normalized output (muE, muECT or muER). Evaluation resolves the wiring into
a dependency order and analyzes every node exactly once.
"""

from __future__ import annotations

import graphlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Union

from .analysis import AnalysisResult, analyze
from .core import ControlFactor, EvidencePair, as_control

REF_FIELDS = ("muE", "muECT", "muER")
PORTS = ("mu", "lam")


class GraphError(Exception):
    """Configuration or wiring problem in an analysis-node graph."""


class GraphCycleError(GraphError):
    """The wiring contains a dependency cycle."""

    def __init__(self, cycle: list[str]):
        self.cycle = list(cycle)
        super().__init__("wiring cycle: " + " -> ".join(self.cycle))


class UnboundPortError(GraphError):
    """A node port was never bound to a constant or a reference."""


@dataclass(frozen=True)
class Ref:
    """Reference to an upstream node's output field."""

    node: str
    field: str = "muER"

    def __post_init__(self) -> None:
        if self.field not in REF_FIELDS:
            raise GraphError(
                f"ref field must be one of {REF_FIELDS}, got {self.field!r}"
            )


PortSource = Union[float, Ref]


@dataclass
class _Node:
    node_id: str
    ftc: ControlFactor
    mu_source: PortSource | None = None
    lam_source: PortSource | None = None


class PanGraph:
    """Mutable builder and evaluator for an acyclic analysis-node network."""

    def __init__(self) -> None:
        self._nodes: dict[str, _Node] = {}
        self._auto = 0
        self.output: str | None = None

    def __contains__(self, node_id: str) -> bool:
        return node_id in self._nodes

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(self._nodes)

    def add_node(self, ftc: ControlFactor | float = 0.5, node_id: str | None = None) -> str:
        """Add a node and return its id (auto-assigned pan1, pan2, ... if omitted)."""
        control = as_control(ftc)
        if node_id is None:
            while True:
                self._auto += 1
                node_id = f"pan{self._auto}"
                if node_id not in self._nodes:
                    break
        elif node_id in self._nodes:
            raise GraphError(f"duplicate node id {node_id!r}")
        self._nodes[node_id] = _Node(node_id, control)
        return node_id

    def bind(self, node_id: str, port: str, source: PortSource) -> None:
        """Bind a port to a constant or a Ref; rebinding replaces the old source."""
        node = self._require(node_id)
        if port not in PORTS:
            raise GraphError(f"unknown port {port!r}, expected one of {PORTS}")
        if isinstance(source, Ref):
            self._require(source.node)
        else:
            source = float(source)
            if not 0.0 <= source <= 1.0:
                raise GraphError(
                    f"constant for {node_id}.{port} must be within [0, 1], got {source!r}"
                )
        setattr(node, f"{port}_source", source)

    def evaluate(self) -> dict[str, AnalysisResult]:
        """Analyze every node once, upstream first.

        Returns results keyed by node id, in evaluation order. Raises
        UnboundPortError for a port with no source and GraphCycleError for
        cyclic wiring.
        """
        dependencies: dict[str, set[str]] = {}
        for node in self._nodes.values():
            upstream = set()
            for port in PORTS:
                source = getattr(node, f"{port}_source")
                if source is None:
                    raise UnboundPortError(
                        f"node {node.node_id!r} port {port!r} is unbound"
                    )
                if isinstance(source, Ref):
                    upstream.add(source.node)
            dependencies[node.node_id] = upstream

        try:
            order = tuple(graphlib.TopologicalSorter(dependencies).static_order())
        except graphlib.CycleError as exc:
            raise GraphCycleError(exc.args[1]) from None

        results: dict[str, AnalysisResult] = {}
        for node_id in order:
            node = self._nodes[node_id]
            mu = self._resolve(node.mu_source, results)
            lam = self._resolve(node.lam_source, results)
            results[node_id] = analyze(EvidencePair(mu, lam), node.ftc)
        return results

    def _require(self, node_id: str) -> _Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise GraphError(f"unknown node id {node_id!r}") from None

    @staticmethod
    def _resolve(source: PortSource, results: dict[str, AnalysisResult]) -> float:
        if isinstance(source, Ref):
            return getattr(results[source.node], source.field)
        return source

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "PanGraph":
        """Build a graph from its file form.

        Schema: {"nodes": [{"id": str, "ftc": float?}, ...],
                 "bindings": [{"node": str, "port": "mu"|"lam",
                               "constant": float | "ref": {"node": str, "field": str?}}, ...],
                 "output": str?}
        """
        if not isinstance(doc, Mapping):
            raise GraphError("graph document must be a JSON object")
        graph = cls()
        nodes = doc.get("nodes")
        if not isinstance(nodes, list) or not nodes:
            raise GraphError('graph document needs a non-empty "nodes" list')
        for entry in nodes:
            if not isinstance(entry, Mapping) or "id" not in entry:
                raise GraphError(f'every node needs an "id": {entry!r}')
            try:
                graph.add_node(float(entry.get("ftc", 0.5)), str(entry["id"]))
            except ValueError as exc:
                raise GraphError(f"node {entry['id']!r}: {exc}") from None
        for entry in doc.get("bindings", []):
            if not isinstance(entry, Mapping) or "node" not in entry or "port" not in entry:
                raise GraphError(f'every binding needs "node" and "port": {entry!r}')
            if "ref" in entry:
                ref = entry["ref"]
                if not isinstance(ref, Mapping) or "node" not in ref:
                    raise GraphError(f'binding ref needs a "node": {entry!r}')
                source: PortSource = Ref(str(ref["node"]), str(ref.get("field", "muER")))
            elif "constant" in entry:
                try:
                    source = float(entry["constant"])
                except (TypeError, ValueError):
                    raise GraphError(f"binding constant is not a number: {entry!r}") from None
            else:
                raise GraphError(f'binding needs "constant" or "ref": {entry!r}')
            graph.bind(str(entry["node"]), str(entry["port"]), source)
        output = doc.get("output")
        if output is not None:
            if output not in graph:
                raise GraphError(f"output node {output!r} does not exist")
            graph.output = str(output)
        return graph


def load_graph(path: str | Path) -> PanGraph:
    """Load a graph description from a JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON: {exc}") from None
    return PanGraph.from_dict(doc)
