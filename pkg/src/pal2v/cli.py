"""Command line interface.

Subcommands cover the whole package: analyze one evidence pair, reduce a
dataset of values, estimate link delay from live or replayed probes, select
a best route from link metrics, and evaluate a node-network description
file. Every subcommand prints text by default and a full-precision JSON
document with --json; the text is rendered from that same document, so
parsing the JSON and re-rendering reproduces the text exactly.

Exit codes: 0 on success, 2 for usage or domain errors, 3 when the
environment fails (live probing unavailable, unreachable host, unreadable
input file).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

from . import __version__
from .analysis import analyze
from .core import ControlFactor, EvidencePair
from .document import build_document, document_json, render_document
from .extractor import normalize_dataset
from .graph import GraphError, load_graph
from .probing import (
    DEFAULT_COUNT,
    DEFAULT_HOST,
    DEFAULT_SIZE,
    IcmpProber,
    ProbeError,
    ReplayProber,
    estimate_delay,
    probe_delays,
)
from .routing import RouteMetrics, route_normalize, select_route

FTC_ENV_VAR = "PAL2V_FTC"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNAVAILABLE = 3


class _UsageError(Exception):
    """Bad flag value or malformed input content; maps to exit code 2."""


class _EnvironmentError(Exception):
    """Unreadable file or failing probe environment; maps to exit code 3."""


def _control(name: str, value: float) -> ControlFactor:
    try:
        return ControlFactor(value)
    except ValueError:
        raise _UsageError(f"{name} must be within [0, 1], got {value!r}") from None


def _resolve_ftc(value: float | None) -> ControlFactor:
    """Explicit --ftc wins, then the PAL2V_FTC variable, then the default."""
    if value is not None:
        return _control("--ftc", value)
    raw = os.environ.get(FTC_ENV_VAR)
    if raw is None or raw.strip() == "":
        return ControlFactor()
    try:
        parsed = float(raw)
    except ValueError:
        raise _UsageError(f"{FTC_ENV_VAR} must be a number, got {raw!r}") from None
    return _control(FTC_ENV_VAR, parsed)


def _read_values(path: str | None) -> list[float]:
    """Read one value per line; blank lines and '#' comments are skipped."""
    if path is None or path == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise _EnvironmentError(f"cannot read {path}: {exc}") from None
        name = path
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            values.append(float(stripped))
        except ValueError:
            raise _UsageError(f"{name}:{lineno}: not a number: {stripped!r}") from None
    if not values:
        raise _UsageError(f"{name}: no input values")
    return values


def _number_list(values: Sequence[float], digits: int) -> str:
    return str([round(float(v), digits) for v in values])


def _emit(doc: Mapping[str, Any], as_json: bool, renderer: Callable[[Mapping[str, Any]], str]) -> None:
    if as_json:
        print(document_json(doc))
    else:
        sys.stdout.write(renderer(doc))


def _delay_lines(values: Sequence[float], doc: Mapping[str, Any]) -> list[str]:
    return [
        f"Delays (msec): {_number_list(values, 3)}",
        f"Arithmetic Mean of the delay: {float(doc['mean_ms']):.3f} msec",
        f"Normalized values (μ) [congestion]: {_number_list(doc['normalized'], 4)}",
        "",
        "=== Final Results ===",
        f"ParaExtrCTX μER (congestion) = {float(doc['muER']):.4f}",
        f"Estimated ParaExtrCTX (msec) = {float(doc['estimate_ms']):.3f}",
        f"Arithmetic Average Delay (msec) = {float(doc['mean_ms']):.3f}",
    ]


def _render_extract(doc: Mapping[str, Any]) -> str:
    return "\n".join(_delay_lines(doc["values"], doc)) + "\n"


def _render_ping(doc: Mapping[str, Any]) -> str:
    if doc["trace"]:
        head = [f"Replaying {doc['trace']}: {doc['received']} recorded replies"]
    else:
        head = [
            f"Pinging {doc['host']} with {doc['sent']} packets of {doc['packet_size']} Bytes...",
            f"Received {doc['received']} of {doc['sent']} replies",
        ]
    return "\n".join(head + _delay_lines(doc["delays_ms"], doc)) + "\n"


_ROUTE_TEXT = {"A": "A", "B": "B", "keep-current": "keep current (undefined analysis)"}


def _render_route(doc: Mapping[str, Any]) -> str:
    return (
        f"Result of the PANnet = {float(doc['muER']):.3f}\n"
        f"Best Route is = {_ROUTE_TEXT[doc['route']]}\n"
    )


def _render_graph(doc: Mapping[str, Any]) -> str:
    lines = []
    for node_id, node in doc["nodes"].items():
        lines.append(
            f"{node_id}: muER = {float(node['muER']):.4f}  label = {node['label']}"
            f"  decision_output = {float(node['decision_output']):.4f}"
        )
    if doc["output"] is not None:
        final = doc["nodes"][doc["output"]]
        lines.append(f"output {doc['output']}: muER = {float(final['muER']):.4f}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    control = _resolve_ftc(args.ftc)
    try:
        pair = EvidencePair(args.mu, args.lam)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    doc = build_document(analyze(pair, control))
    _emit(doc, args.json, render_document)
    return EXIT_OK


def _cmd_extract(args: argparse.Namespace) -> int:
    control = _resolve_ftc(args.ftc)
    values = _read_values(args.input)
    dataset = normalize_dataset(values)
    estimate = estimate_delay(values)
    doc = {
        "FtC": control.ftc,
        "values": values,
        "normalized": list(dataset.values),
        "muER": estimate.muER,
        "estimate_ms": estimate.estimate_ms,
        "mean_ms": estimate.mean_ms,
    }
    _emit(doc, args.json, _render_extract)
    return EXIT_OK


def _cmd_ping_estimate(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise _UsageError(f"--count must be >= 1, got {args.count}")
    if args.size < 0:
        raise _UsageError(f"--size must be >= 0, got {args.size}")
    prober = ReplayProber(args.offline) if args.offline else IcmpProber()
    report = probe_delays(args.host, args.count, args.size, prober)
    estimate = estimate_delay(report)
    dataset = normalize_dataset(report.delays_ms)
    doc = {
        "host": report.host,
        "packet_size": report.packet_size,
        "sent": report.sent,
        "received": report.received,
        "trace": args.offline,
        "delays_ms": list(report.delays_ms),
        "normalized": list(dataset.values),
        "muER": estimate.muER,
        "estimate_ms": estimate.estimate_ms,
        "mean_ms": estimate.mean_ms,
    }
    _emit(doc, args.json, _render_ping)
    return EXIT_OK


def _cmd_route_select(args: argparse.Namespace) -> int:
    control = _resolve_ftc(args.ftc)
    try:
        metrics = RouteMetrics(args.rxj, args.txj, args.rtt, args.pc, args.pl)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    mu1, lam1, mu2, lam2, mu3 = route_normalize(metrics)
    decision = select_route(metrics, control)
    doc = {
        "rxj_ms": metrics.rxj_ms,
        "txj_ms": metrics.txj_ms,
        "rtt_ms": metrics.rtt_ms,
        "pc_pct": metrics.pc_pct,
        "pl_pct": metrics.pl_pct,
        "FtC": control.ftc,
        "evidence": {"mu1": mu1, "lam1": lam1, "mu2": mu2, "lam2": lam2, "mu3": mu3},
        "muER": decision.muER,
        "decision_output": decision.decision,
        "route": decision.route.value,
    }
    _emit(doc, args.json, _render_route)
    return EXIT_OK


def _cmd_graph(args: argparse.Namespace) -> int:
    try:
        graph = load_graph(args.file)
    except OSError as exc:
        raise _EnvironmentError(f"cannot read {args.file}: {exc}") from None
    except GraphError as exc:
        raise _UsageError(str(exc)) from None
    try:
        results = graph.evaluate()
    except GraphError as exc:
        raise _UsageError(str(exc)) from None
    doc = {
        "output": graph.output,
        "nodes": {node_id: build_document(result) for node_id, result in results.items()},
    }
    _emit(doc, args.json, _render_graph)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pal2v",
        description="Paraconsistent evidence analysis and its network applications.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze_cmd = commands.add_parser("analyze", help="analyze one evidence pair")
    analyze_cmd.add_argument("--mu", type=float, required=True, help="favorable evidence in [0, 1]")
    analyze_cmd.add_argument("--lam", type=float, required=True, help="unfavorable evidence in [0, 1]")
    _add_common(analyze_cmd)
    analyze_cmd.set_defaults(handler=_cmd_analyze)

    extract_cmd = commands.add_parser(
        "extract", help="reduce a dataset to one fused value"
    )
    extract_cmd.add_argument(
        "--input", metavar="FILE", help="one value per line ('-' or omitted: stdin)"
    )
    _add_common(extract_cmd)
    extract_cmd.set_defaults(handler=_cmd_extract)

    ping_cmd = commands.add_parser(
        "ping-estimate", help="estimate link delay from echo probes"
    )
    ping_cmd.add_argument("--host", default=DEFAULT_HOST, help="host to probe")
    ping_cmd.add_argument("--count", type=int, default=DEFAULT_COUNT, help="echo requests to send")
    ping_cmd.add_argument("--size", type=int, default=DEFAULT_SIZE, help="payload size in bytes")
    ping_cmd.add_argument(
        "--offline", metavar="TRACE", help="replay a recorded delay trace instead of probing"
    )
    ping_cmd.add_argument("--json", action="store_true", help="print the JSON document")
    ping_cmd.set_defaults(handler=_cmd_ping_estimate)

    route_cmd = commands.add_parser(
        "route-select", help="select a best route from link metrics"
    )
    route_cmd.add_argument("--rxj", type=float, required=True, help="reception jitter (ms)")
    route_cmd.add_argument("--txj", type=float, required=True, help="transmission jitter (ms)")
    route_cmd.add_argument("--rtt", type=float, required=True, help="round-trip time (ms)")
    route_cmd.add_argument("--pc", type=float, required=True, help="processing consumption (%%)")
    route_cmd.add_argument("--pl", type=float, required=True, help="packet loss (%%)")
    _add_common(route_cmd)
    route_cmd.set_defaults(handler=_cmd_route_select)

    graph_cmd = commands.add_parser(
        "graph", help="evaluate a node-network description file"
    )
    graph_cmd.add_argument("file", help="JSON graph description")
    graph_cmd.add_argument("--json", action="store_true", help="print the JSON document")
    graph_cmd.set_defaults(handler=_cmd_graph)

    return parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--ftc",
        type=float,
        default=None,
        help=f"certainty control factor in [0, 1] (default: ${FTC_ENV_VAR} or 0.5)",
    )
    sub.add_argument("--json", action="store_true", help="print the JSON document")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"pal2v: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _EnvironmentError as exc:
        print(f"pal2v: error: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except ProbeError as exc:
        print(f"pal2v: error: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
