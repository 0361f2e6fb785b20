"""Delay probing and the contradiction-extraction delay estimator.

Two delay sources sit behind one interface: a live ICMP echo client and a
replay source that reads a recorded trace file. The estimator normalizes the
collected delays, reduces them to a single fused value and maps it back to
milliseconds, reporting the arithmetic mean alongside for comparison.
"""

from __future__ import annotations

import os
import select
import socket
import struct
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean
from typing import NamedTuple, Protocol, Sequence

from . import extractor

DEFAULT_HOST = "www.google.com"
DEFAULT_COUNT = 10
DEFAULT_SIZE = 500

ICMP_ECHO_REQUEST = 8
ICMP_ECHO_REPLY = 0
_ICMP_HEADER = struct.Struct("!BBHHH")


class ProbeError(RuntimeError):
    """The probe produced no usable replies."""


class ProbeUnavailableError(ProbeError):
    """Live probing cannot run in this environment."""


@dataclass(frozen=True)
class DelayProbeReport:
    """Outcome of one probe run: what was asked for and what came back."""

    host: str
    sent: int
    received: int
    delays_ms: tuple[float, ...]
    packet_size: int

    def __post_init__(self) -> None:
        if self.received != len(self.delays_ms):
            raise ValueError("received must equal the number of recorded delays")
        if self.received > self.sent:
            raise ValueError("cannot receive more replies than requests sent")
        if any(delay < 0.0 for delay in self.delays_ms):
            raise ValueError("delays must be non-negative")


class Prober(Protocol):
    def probe(self, host: str, count: int, size_bytes: int) -> DelayProbeReport: ...


class ReplayProber:
    """Replays a recorded delay trace: one value in milliseconds per line.

    Blank lines and lines starting with '#' are ignored. The whole trace is
    replayed verbatim, so count and size are ignored and the report reflects
    exactly what was recorded.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def probe(self, host: str, count: int, size_bytes: int) -> DelayProbeReport:
        try:
            text = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ProbeError(f"cannot read trace {self.path}: {exc}") from exc
        delays = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                delays.append(float(stripped))
            except ValueError:
                raise ProbeError(
                    f"{self.path}:{lineno}: not a delay value: {stripped!r}"
                ) from None
        if not delays:
            raise ProbeError(f"no replies recorded in trace {self.path}")
        return DelayProbeReport(
            host=host,
            sent=len(delays),
            received=len(delays),
            delays_ms=tuple(delays),
            packet_size=size_bytes,
        )


def _checksum(data: bytes) -> int:
    if len(data) % 2:
        data += b"\x00"
    total = sum(struct.unpack(f"!{len(data) // 2}H", data))
    total = (total >> 16) + (total & 0xFFFF)
    total += total >> 16
    return ~total & 0xFFFF


class IcmpProber:
    """Sequential ICMP echo client: one outstanding request, fixed timeout.

    Prefers an unprivileged datagram ICMP socket and falls back to a raw
    socket. Lost replies are skipped, not retried; a probe with zero replies
    raises instead of reporting an empty run.
    """

    def __init__(self, timeout_s: float = 2.0):
        self.timeout_s = timeout_s

    def probe(self, host: str, count: int, size_bytes: int) -> DelayProbeReport:
        if count < 1:
            raise ValueError(f"count must be >= 1, got {count!r}")
        if size_bytes < 0:
            raise ValueError(f"size_bytes must be >= 0, got {size_bytes!r}")
        try:
            address = socket.gethostbyname(host)
        except socket.gaierror as exc:
            raise ProbeError(f"cannot resolve {host!r}: {exc}") from exc

        sock, raw = self._open_socket()
        delays = []
        ident = os.getpid() & 0xFFFF
        with sock:
            for sequence in range(1, count + 1):
                delay = self._echo_once(sock, raw, address, ident, sequence, size_bytes)
                if delay is not None:
                    delays.append(delay)
        if not delays:
            raise ProbeError(f"no replies from {host!r} ({count} requests)")
        return DelayProbeReport(
            host=host,
            sent=count,
            received=len(delays),
            delays_ms=tuple(delays),
            packet_size=size_bytes,
        )

    @staticmethod
    def _open_socket() -> tuple[socket.socket, bool]:
        try:
            return socket.socket(socket.AF_INET, socket.SOCK_DGRAM, socket.IPPROTO_ICMP), False
        except OSError:
            pass
        try:
            return socket.socket(socket.AF_INET, socket.SOCK_RAW, socket.IPPROTO_ICMP), True
        except PermissionError as exc:
            raise ProbeUnavailableError(
                "cannot open an ICMP socket (needs privileges or "
                "net.ipv4.ping_group_range); replay a recorded trace instead"
            ) from exc
        except OSError as exc:
            raise ProbeUnavailableError(f"cannot open an ICMP socket: {exc}") from exc

    def _echo_once(
        self,
        sock: socket.socket,
        raw: bool,
        address: str,
        ident: int,
        sequence: int,
        size_bytes: int,
    ) -> float | None:
        payload = b"Q" * size_bytes
        header = _ICMP_HEADER.pack(ICMP_ECHO_REQUEST, 0, 0, ident, sequence)
        checksum = _checksum(header + payload)
        packet = _ICMP_HEADER.pack(ICMP_ECHO_REQUEST, 0, checksum, ident, sequence) + payload

        start = time.perf_counter()
        try:
            sock.sendto(packet, (address, 0))
        except OSError:
            return None

        deadline = start + self.timeout_s
        while True:
            remaining = deadline - time.perf_counter()
            if remaining <= 0:
                return None
            readable, _, _ = select.select([sock], [], [], remaining)
            if not readable:
                return None
            elapsed = (time.perf_counter() - start) * 1000.0
            try:
                data, _ = sock.recvfrom(65535)
            except OSError:
                return None
            if raw:
                # Strip the IP header; its length lives in the low IHL nibble.
                if len(data) < 20:
                    continue
                data = data[(data[0] & 0x0F) * 4 :]
            if len(data) < _ICMP_HEADER.size:
                continue
            kind, _, _, reply_ident, reply_sequence = _ICMP_HEADER.unpack_from(data)
            if kind != ICMP_ECHO_REPLY or reply_sequence != sequence:
                continue
            # Datagram sockets rewrite the identifier, so only raw replies
            # can be matched on it.
            if raw and reply_ident != ident:
                continue
            return elapsed


def probe_delays(
    host: str = DEFAULT_HOST,
    count: int = DEFAULT_COUNT,
    size_bytes: int = DEFAULT_SIZE,
    prober: Prober | None = None,
) -> DelayProbeReport:
    """Collect echo delays from a live prober (default) or any replay source."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count!r}")
    active = prober if prober is not None else IcmpProber()
    return active.probe(host, count, size_bytes)


class DelayEstimate(NamedTuple):
    muER: float
    estimate_ms: float
    mean_ms: float


def estimate_delay(report: DelayProbeReport | Sequence[float]) -> DelayEstimate:
    """Contradiction-extraction delay estimate, with the plain mean alongside.

    Accepts a probe report or a bare delay sequence. The fused estimate
    always lies within [min(delays), max(delays)].
    """
    delays = report.delays_ms if isinstance(report, DelayProbeReport) else tuple(report)
    if not delays:
        raise ValueError("no delays to estimate")
    dataset = extractor.normalize_dataset(delays)
    fused = extractor.reduce(dataset.values)
    return DelayEstimate(
        muER=fused,
        estimate_ms=extractor.denormalize(fused, dataset.min_raw, dataset.max_raw),
        mean_ms=fmean(delays),
    )
