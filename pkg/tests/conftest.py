from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402

from vcrit.catalog import Catalog, load_critical_raw  # noqa: E402
from vcrit.detect import P5, W4  # noqa: E402
from vcrit.generate import characterize  # noqa: E402
from vcrit.graph import parse_graph6  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def crit21():
    return load_critical_raw()


@pytest.fixture(scope="session")
def full_run():
    """The complete k=5 (P5,W4) generator run from the standard seeds."""
    found, stats = characterize(5, [P5, W4])
    return found, stats


@pytest.fixture(scope="session")
def full64(full_run):
    return [parse_graph6(s) for s in full_run[0]]


@pytest.fixture(scope="session")
def catalog64(full64):
    return Catalog.from_graphs(full64)


@pytest.fixture(scope="session")
def small_graphs():
    """All 208 graphs on 1..6 vertices up to isomorphism, via the permutation oracle."""
    return [g for g in oracles.all_graphs_bruteforce(6) if g.n > 0]


@pytest.fixture
def acceptance_line():
    def record(number: int, name: str, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} :: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
