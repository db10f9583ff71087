"""Discernibility matrix, attribute core, and exhaustive reduct enumeration.

The matrix stores, for every pair of objects with different decisions, the
set of condition attributes on which the pair disagrees.  Conjoining these
per-pair disjunctions gives a monotone CNF whose prime implicants are exactly
the minimal reducts; `all_reducts` expands that CNF to minimal DNF with eager
absorption.  Exhaustive enumeration is an oracle for small instances, not a
production path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .approx import positive_region
from .dataset import DecisionTable
from .errors import InconsistentTable, TooManyAttributes


@dataclass(frozen=True)
class DiscernMatrix:
    """Upper-triangular pair map: (i, j) with i < j -> differing attributes.

    Only pairs with different decisions are stored; an absent pair is a
    zero entry.  Attribute sets are stored as frozensets of column indices.
    """

    n_objects: int
    attr_names: tuple[str, ...]
    entries: Mapping[tuple[int, int], frozenset[int]]

    def get(self, i: int, j: int) -> frozenset[int] | None:
        """Entry for an unordered pair; symmetric by construction."""
        if i == j:
            return None
        return self.entries.get((min(i, j), max(i, j)))

    def get_names(self, i: int, j: int) -> frozenset[str] | None:
        e = self.get(i, j)
        if e is None:
            return None
        return frozenset(self.attr_names[k] for k in e)


def build_matrix(t: DecisionTable) -> DiscernMatrix:
    """Discernibility matrix of a consistent table.

    Raises InconsistentTable if a decision-differing pair agrees on every
    condition attribute (which would produce an empty entry).
    """
    cells = t.cells
    dec = t.decisions
    entries: dict[tuple[int, int], frozenset[int]] = {}
    n = t.n_objects
    for i in range(n - 1):
        differs = np.nonzero(dec[i + 1 :] != dec[i])[0]
        if differs.size == 0:
            continue
        diff_cells = cells[i + 1 :][differs] != cells[i]
        for row, j_off in enumerate(differs.tolist()):
            attrs = np.nonzero(diff_cells[row])[0]
            if attrs.size == 0:
                raise InconsistentTable(
                    f"objects {i} and {i + 1 + j_off} agree on all conditions "
                    "but differ in decision"
                )
            entries[(i, i + 1 + j_off)] = frozenset(attrs.tolist())
    return DiscernMatrix(n_objects=n, attr_names=t.condition_names, entries=entries)


def core(m: DiscernMatrix) -> frozenset[str]:
    """Union of the singleton entries: attributes no reduct can drop."""
    out: set[str] = set()
    for attrs in m.entries.values():
        if len(attrs) == 1:
            out.add(m.attr_names[next(iter(attrs))])
    return frozenset(out)


def table_core(t: DecisionTable) -> frozenset[str]:
    """Core computed without materializing the matrix.

    On a consistent table, attribute a is in the core iff deleting it shrinks
    the positive region; equivalent to the singleton-entry definition (the
    pair that loses discernibility is distinguished by a alone).
    """
    full = positive_region(t, range(t.n_conditions))
    if full != t.universe_mask:
        raise InconsistentTable("core is defined for consistent tables only")
    out: set[str] = set()
    for j in range(t.n_conditions):
        rest = [k for k in range(t.n_conditions) if k != j]
        if positive_region(t, rest) != full:
            out.add(t.condition_names[j])
    return frozenset(out)


def _minimize(sets: list[frozenset[int]]) -> list[frozenset[int]]:
    """Drop any set that is a superset of another (absorption)."""
    sets = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in sets:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def all_reducts(m: DiscernMatrix, limit: int = 20) -> frozenset[frozenset[str]]:
    """All minimal attribute subsets hitting every non-zero matrix entry.

    CNF-to-DNF expansion of the discernibility function with eager absorption;
    exponential in the worst case, hence the attribute limit.
    """
    if len(m.attr_names) > limit:
        raise TooManyAttributes(
            f"{len(m.attr_names)} attributes exceed the enumeration limit {limit}"
        )
    clauses = _minimize(list(m.entries.values()))
    freq = Counter(a for cl in clauses for a in cl)
    clauses.sort(key=lambda cl: (len(cl), -sum(freq[a] for a in cl), sorted(cl)))

    partials: list[frozenset[int]] = [frozenset()]
    for cl in clauses:
        grown: list[frozenset[int]] = []
        for p in partials:
            if p & cl:
                grown.append(p)
            else:
                grown.extend(p | {a} for a in cl)
        partials = _minimize(grown)
    return frozenset(
        frozenset(m.attr_names[a] for a in p) for p in partials
    )
