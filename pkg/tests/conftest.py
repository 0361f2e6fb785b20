"""Shared paths and helpers for the test suite."""

import os
import subprocess
import sys
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"
TRANSCRIPT_DIR = DATA_DIR / "transcripts"

# Reference delay trace used across the extractor, probing and CLI tests.
DELAYS_12 = (
    11.28, 11.68, 11.06, 11.09, 10.99, 10.94,
    10.97, 11.06, 11.15, 11.47, 10.96, 11.11,
)


def _run_cli(*args, stdin=None, env_extra=None):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    env = os.environ.copy()
    env.pop("PAL2V_FTC", None)
    if env_extra:
        env.update(env_extra)
    completed = subprocess.run(
        [sys.executable, "-m", "pal2v", *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=env,
    )
    return completed.returncode, completed.stdout, completed.stderr


@pytest.fixture
def run_cli():
    return _run_cli


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def transcript_dir():
    return TRANSCRIPT_DIR


@pytest.fixture
def delay_trace():
    return DATA_DIR / "delays_12.trace"


@pytest.fixture
def delays_12():
    return list(DELAYS_12)
