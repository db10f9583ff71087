"""Categorical decision tables: CSV ingestion, integer coding, consistency checks.

A decision table is a complete information system: a finite set of objects
(rows), categorical condition attributes and exactly one decision attribute.
All values are dictionary-encoded to dense integer codes per column, assigned
in order of first occurrence so the coding is stable across runs.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DecisionColumnNotFound,
    DuplicateColumnName,
    EmptyTable,
    MissingValue,
    UnknownAttribute,
)


def _encode_column(values: Sequence[str]) -> tuple[list[int], tuple[str, ...]]:
    """Dense first-occurrence coding of one column."""
    codes: dict[str, int] = {}
    out = []
    for v in values:
        if v not in codes:
            codes[v] = len(codes)
        out.append(codes[v])
    return out, tuple(codes)


@dataclass(frozen=True, eq=False)
class DecisionTable:
    """Immutable categorical decision system.

    ``cells`` holds the condition-value codes (one row per object, one column
    per condition attribute), ``decisions`` the decision codes.  Both are
    read-only int32 arrays.  ``value_dictionaries`` maps every attribute name
    (the decision included) to a tuple of the original strings, indexed by
    code.
    """

    object_ids: tuple[str, ...]
    condition_names: tuple[str, ...]
    decision_name: str
    cells: np.ndarray
    decisions: np.ndarray
    value_dictionaries: dict[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        n, c = self.cells.shape
        if n < 1:
            raise EmptyTable("table has no objects")
        if c < 1:
            raise EmptyTable("table has no condition attributes")
        if len(self.decisions) != n or len(self.object_ids) != n:
            raise ValueError("row-aligned fields disagree on |U|")
        self.cells.setflags(write=False)
        self.decisions.setflags(write=False)

    # -- basic geometry ----------------------------------------------------

    @property
    def n_objects(self) -> int:
        return self.cells.shape[0]

    @property
    def n_conditions(self) -> int:
        return self.cells.shape[1]

    @property
    def universe_mask(self) -> int:
        """Bitmask with one bit per object (bit i = object i)."""
        return (1 << self.n_objects) - 1

    # -- attribute resolution ----------------------------------------------

    def condition_index(self, attr: int | str) -> int:
        """Resolve a condition attribute given by name or column index."""
        if isinstance(attr, (int, np.integer)):
            i = int(attr)
            if not 0 <= i < self.n_conditions:
                raise UnknownAttribute(f"condition index out of range: {i}")
            return i
        try:
            return self.condition_names.index(attr)
        except ValueError:
            if attr == self.decision_name:
                raise UnknownAttribute(
                    f"{attr!r} is the decision attribute, not a condition"
                ) from None
            raise UnknownAttribute(f"unknown attribute: {attr!r}") from None

    def resolve_conditions(self, attrs: Iterable[int | str]) -> tuple[int, ...]:
        """Resolve to a deduplicated tuple of column indices, ascending."""
        return tuple(sorted({self.condition_index(a) for a in attrs}))

    def decode(self, attr: str, code: int) -> str:
        """Original string value for a code of the named attribute."""
        return self.value_dictionaries[attr][code]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_codes(
        cls,
        cells: Sequence[Sequence[int]] | np.ndarray,
        decisions: Sequence[int] | np.ndarray,
        condition_names: Sequence[str] | None = None,
        decision_name: str = "d",
        object_ids: Sequence[str] | None = None,
    ) -> "DecisionTable":
        """Build a table from integer-coded rows (mainly for tests/generators).

        Codes are re-encoded by first occurrence so each column satisfies the
        dense 0..k-1 invariant even if the input skips values.
        """
        raw = np.asarray(cells, dtype=np.int64)
        if raw.ndim != 2:
            raise ValueError("cells must be 2-dimensional")
        n, c = raw.shape
        names = tuple(condition_names) if condition_names else tuple(
            f"c{j}" for j in range(c)
        )
        if len(set(names)) != len(names) or decision_name in names:
            raise DuplicateColumnName("attribute names must be unique")
        ids = tuple(object_ids) if object_ids else tuple(str(i) for i in range(n))
        enc = np.empty((n, c), dtype=np.int32)
        dicts: dict[str, tuple[str, ...]] = {}
        for j, name in enumerate(names):
            col, dicts[name] = _encode_column([str(v) for v in raw[:, j].tolist()])
            enc[:, j] = col
        dec_codes, dicts[decision_name] = _encode_column(
            [str(v) for v in np.asarray(decisions).tolist()]
        )
        return cls(
            object_ids=ids,
            condition_names=names,
            decision_name=decision_name,
            cells=enc,
            decisions=np.asarray(dec_codes, dtype=np.int32),
            value_dictionaries=dicts,
        )

    # -- identity ----------------------------------------------------------

    def fingerprint(self) -> str:
        """sha256 of a canonical serialization (used for determinism checks)."""
        payload = json.dumps(
            {
                "ids": self.object_ids,
                "conditions": self.condition_names,
                "decision": self.decision_name,
                "cells": self.cells.tolist(),
                "decisions": self.decisions.tolist(),
                "dictionaries": {k: list(v) for k, v in self.value_dictionaries.items()},
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionTable):
            return NotImplemented
        return (
            self.object_ids == other.object_ids
            and self.condition_names == other.condition_names
            and self.decision_name == other.decision_name
            and np.array_equal(self.cells, other.cells)
            and np.array_equal(self.decisions, other.decisions)
            and self.value_dictionaries == other.value_dictionaries
        )

    def __hash__(self) -> int:
        return hash(self.fingerprint())


def load_csv(
    path: str | Path,
    decision: int | str | None = None,
    id_column: str | None = None,
    column_names: Sequence[str] | None = None,
) -> DecisionTable:
    """Load a categorical decision table from a comma-separated file.

    The first row must be a header unless ``column_names`` supplies one (for
    headerless UCI ``.data`` files).  ``decision`` selects the decision column
    by name or by position in the file header; by default the last column is
    used (the last non-id column if the id column happens to be last).
    ``id_column`` names a column of row labels that is excluded from the
    condition attributes.

    Every cell must be non-empty: missing values are a hard error, because the
    whole toolkit assumes complete information systems.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = [[cell.strip() for cell in row] for row in reader if row]

    if column_names is not None:
        header = [str(c).strip() for c in column_names]
    else:
        if not rows:
            raise EmptyTable(f"{path}: file is empty")
        header = rows[0]
        rows = rows[1:]

    if len(set(header)) != len(header):
        dupes = sorted({h for h in header if header.count(h) > 1})
        raise DuplicateColumnName(f"{path}: duplicated column name(s): {dupes}")
    if not rows:
        raise EmptyTable(f"{path}: no data rows")

    for r, row in enumerate(rows, start=1):
        if len(row) != len(header):
            raise MissingValue(
                f"{path}: row {r} has {len(row)} fields, expected {len(header)}"
            )
        for c, cell in enumerate(row):
            if cell == "":
                raise MissingValue(f"{path}: empty cell at row {r}, column {header[c]!r}")

    if id_column is not None and id_column not in header:
        raise UnknownAttribute(f"{path}: id column {id_column!r} not in header")

    if decision is None:
        dec_idx = len(header) - 1
        while id_column is not None and header[dec_idx] == id_column:
            dec_idx -= 1
            if dec_idx < 0:
                raise DecisionColumnNotFound(f"{path}: only an id column present")
    elif isinstance(decision, (int, np.integer)):
        dec_idx = int(decision)
        if not 0 <= dec_idx < len(header):
            raise DecisionColumnNotFound(f"{path}: decision index {dec_idx} out of range")
    else:
        if decision not in header:
            raise DecisionColumnNotFound(f"{path}: decision column {decision!r} not found")
        dec_idx = header.index(decision)

    if id_column is not None and header[dec_idx] == id_column:
        raise DecisionColumnNotFound(
            f"{path}: decision column {header[dec_idx]!r} is the id column"
        )

    cond_idx = [
        j
        for j, name in enumerate(header)
        if j != dec_idx and (id_column is None or name != id_column)
    ]
    if not cond_idx:
        raise EmptyTable(f"{path}: no condition attributes")

    if id_column is not None:
        id_pos = header.index(id_column)
        object_ids = tuple(row[id_pos] for row in rows)
    else:
        object_ids = tuple(str(i) for i in range(len(rows)))

    n = len(rows)
    enc = np.empty((n, len(cond_idx)), dtype=np.int32)
    dicts: dict[str, tuple[str, ...]] = {}
    names = tuple(header[j] for j in cond_idx)
    for out_j, j in enumerate(cond_idx):
        col, dicts[header[j]] = _encode_column([row[j] for row in rows])
        enc[:, out_j] = col
    dec_codes, dicts[header[dec_idx]] = _encode_column([row[dec_idx] for row in rows])

    return DecisionTable(
        object_ids=object_ids,
        condition_names=names,
        decision_name=header[dec_idx],
        cells=enc,
        decisions=np.asarray(dec_codes, dtype=np.int32),
        value_dictionaries=dicts,
    )


def check_consistency(t: DecisionTable) -> list[tuple[int, int]]:
    """Witness pairs of objects that agree on all conditions but disagree on d.

    Returns an empty list for a consistent (compatible) table.  For each
    conflicting equivalence class one pair per extra decision value is
    reported: (first object of the class, first object carrying the other
    decision).
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, row in enumerate(t.cells.tolist()):
        groups.setdefault(tuple(row), []).append(i)
    conflicts: list[tuple[int, int]] = []
    dec = t.decisions.tolist()
    for members in groups.values():
        seen: dict[int, int] = {}
        rep = members[0]
        for i in members:
            if dec[i] not in seen:
                seen[dec[i]] = i
                if dec[i] != dec[rep]:
                    conflicts.append((rep, i))
    return conflicts


def is_consistent(t: DecisionTable) -> bool:
    """True iff no two objects share all condition values but differ in decision."""
    return not check_consistency(t)
