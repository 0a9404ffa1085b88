"""Shared fixtures plus a per-criterion summary for the acceptance suite."""

from __future__ import annotations

import pathlib
import re

import pytest

from arglab import ArgumentFramework

DATA_DIR = pathlib.Path(__file__).resolve().parents[1] / "data"

SAMPLE_ARGS = ("A", "B", "C", "D", "E")
SAMPLE_ATTS = (("A", "B"), ("C", "B"), ("C", "D"), ("D", "C"), ("D", "E"), ("E", "E"))

# Ten benchmark belief assignments over the sample graph, as (A, B, C, D, E)
# tenths, and the postulates each one satisfies.
BENCHMARK_BELIEFS = {
    "P1": (6, 5, 2, 4, 8),
    "P2": (3, 5, 6, 2, 5),
    "P3": (7, 4, 6, 4, 5),
    "P4": (10, 5, 10, 0, 4),
    "P5": (10, 0, 10, 0, 5),
    "P6": (10, 0, 5, 4, 5),
    "P7": (5, 0, 10, 0, 5),
    "P8": (5, 10, 5, 5, 5),
    "P9": (6, 10, 4, 7, 5),
    "P10": (5, 5, 5, 5, 5),
}

BENCHMARK_COLUMNS = (
    "PRE", "RAT", "STC", "PRO", "RES", "COH", "JUS", "INV", "DIS",
    "GRD", "TRU", "ANT", "DEM", "SFOU", "FOU", "SOPT", "OPT",
)

# Expected cells, one T/F letter per column above.
BENCHMARK_MATRIX = {
    "P1": "FFFFFFFFFFFFTTFFF",
    "P2": "TTFTFFFFFFFFTFFFF",
    "P3": "TTTTFFFFTTTFTTFTF",
    "P4": "TTFTFFFFFFFFTTTFF",
    "P5": "TTTTFTTFTTTFTTTTT",
    "P6": "TTTTFTFFFTFFTTTFF",
    "P7": "TTTTFTFFTTFFTTFTF",
    "P8": "TTTFFFFFTTFFFTFTF",
    "P9": "TFFFFFFFTTTTFTFTF",
    "P10": "TTTTFTFTTTFFTTFTF",
}


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture
def sample_af() -> ArgumentFramework:
    return ArgumentFramework(SAMPLE_ARGS, SAMPLE_ATTS)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[int, str] = {}
    for status, reports in terminalreporter.stats.items():
        if status not in ("passed", "failed", "error"):
            continue
        for rep in reports:
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", nodeid)
            if not m:
                continue
            n = int(m.group(1))
            verdict = "PASS" if status == "passed" else "FAIL"
            if outcomes.get(n) != "FAIL":
                outcomes[n] = verdict
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for n in sorted(outcomes):
            terminalreporter.write_line(f"criterion {n:02d}: {outcomes[n]}")
