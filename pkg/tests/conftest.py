"""Shared fixtures: the toy tables, random-table generators, dataset access."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from rsreduct import DatasetSpec, DecisionTable, load_config, load_csv

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
UCI_MANIFEST = DATA_DIR / "uci" / "uci.conf"
FIXTURES_CONF = DATA_DIR / "fixtures.conf"


def make_table(cells, decisions, names=None, ids=None) -> DecisionTable:
    return DecisionTable.from_codes(
        cells, decisions, condition_names=names, object_ids=ids
    )


@pytest.fixture
def t1() -> DecisionTable:
    """4 objects, conditions a/b, decision d; a alone determines d."""
    return load_csv(DATA_DIR / "t1.csv", decision="d", id_column="id")


@pytest.fixture
def yellow_small() -> DecisionTable:
    return load_csv(DATA_DIR / "yellow-small.csv", decision="inflated")


@pytest.fixture
def adult_stretch() -> DecisionTable:
    return load_csv(DATA_DIR / "adult+stretch.csv", decision="inflated")


def uci_spec(name: str) -> DatasetSpec:
    for spec in load_config(UCI_MANIFEST).datasets:
        if spec.name == name:
            return spec
    raise KeyError(name)


def uci_table(name: str) -> DecisionTable:
    """Load a manifest dataset, skipping the test if it was not fetched."""
    spec = uci_spec(name)
    if not spec.path.exists():
        pytest.skip(f"dataset {name} not fetched ({spec.path}); see data/uci/README.md")
    return spec.load()


def random_table(
    rng: np.random.Generator,
    max_objects: int = 30,
    max_attrs: int = 6,
    max_values: int = 4,
    max_decisions: int = 4,
) -> DecisionTable:
    n = int(rng.integers(1, max_objects + 1))
    c = int(rng.integers(1, max_attrs + 1))
    cells = rng.integers(0, max_values, size=(n, c))
    dec = rng.integers(0, max_decisions, size=n)
    return DecisionTable.from_codes(cells, dec)


def random_consistent_table(
    rng: np.random.Generator,
    max_objects: int = 30,
    max_attrs: int = 6,
    max_values: int = 4,
    max_decisions: int = 4,
) -> DecisionTable:
    """Random cells with the decision a random function of a random subset.

    Consistent by construction; the hidden subset keeps reducts non-trivial.
    """
    n = int(rng.integers(1, max_objects + 1))
    c = int(rng.integers(1, max_attrs + 1))
    cells = rng.integers(0, max_values, size=(n, c))
    k = int(rng.integers(1, c + 1))
    support = rng.choice(c, size=k, replace=False)
    mapping: dict[tuple[int, ...], int] = {}
    dec = np.zeros(n, dtype=np.int64)
    for i in range(n):
        key = tuple(int(v) for v in cells[i, support])
        if key not in mapping:
            mapping[key] = int(rng.integers(0, max_decisions))
        dec[i] = mapping[key]
    return DecisionTable.from_codes(cells, dec)


@st.composite
def tables(draw, max_objects: int = 16, max_attrs: int = 4, max_values: int = 3):
    n = draw(st.integers(1, max_objects))
    c = draw(st.integers(1, max_attrs))
    cells = draw(
        st.lists(
            st.lists(st.integers(0, max_values - 1), min_size=c, max_size=c),
            min_size=n,
            max_size=n,
        )
    )
    dec = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return DecisionTable.from_codes(cells, dec)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one line per acceptance criterion at the end of the run."""
    lines: dict[str, str] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if getattr(rep, "when", "call") != "call":
                continue
            if "acceptance" in rep.keywords:
                lines[rep.nodeid.split("::")[-1]] = (
                    "PASS" if status == "passed" else "FAIL"
                )
    for rep in terminalreporter.stats.get("skipped", []):
        if "acceptance" in rep.keywords:
            lines[rep.nodeid.split("::")[-1]] = "SKIP"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name in sorted(lines):
            terminalreporter.write_line(f"{lines[name]:5s} {name}")
