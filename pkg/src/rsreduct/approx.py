"""Indiscernibility partitions and approximation-region primitives.

Object sets are plain Python ints used as bitmasks over row indices (bit i
set = object i in the set), so union/intersection/containment run over
machine words.  Partitions keep their blocks in a canonical order: ascending
by the smallest contained object index, which is also first-occurrence order
when scanning rows top to bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dataset import DecisionTable
from .errors import UnknownAttribute


def mask_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Partition:
    """Equivalence classes of agreement on ``source_attrs``.

    ``masks`` are the block bitmasks in canonical order; ``sizes`` the
    matching cardinalities.  Blocks are disjoint and cover the universe.
    """

    masks: tuple[int, ...]
    sizes: tuple[int, ...]
    n_objects: int
    source_attrs: tuple[str, ...]

    @property
    def n_blocks(self) -> int:
        return len(self.masks)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as sorted index tuples, canonical order."""
        return tuple(indices_from_mask(m) for m in self.masks)

    def universe(self) -> int:
        return (1 << self.n_objects) - 1


@dataclass(frozen=True)
class RegionTriple:
    """Positive/negative/boundary regions; pairwise disjoint, union = U."""

    positive: int
    negative: int
    boundary: int


def _key_columns(t: DecisionTable, attrs: Iterable[int | str]) -> tuple[list[list[int]], tuple[str, ...]]:
    """Resolve attrs (conditions and/or the decision) into key columns."""
    cond: set[int] = set()
    with_decision = False
    for a in attrs:
        if isinstance(a, str) and a == t.decision_name:
            with_decision = True
        else:
            cond.add(t.condition_index(a))
    idx = sorted(cond)
    cols = [t.cells[:, j].tolist() for j in idx]
    names = [t.condition_names[j] for j in idx]
    if with_decision:
        cols.append(t.decisions.tolist())
        names.append(t.decision_name)
    return cols, tuple(names)


def _group_masks(cols: list[list[int]], n: int) -> tuple[int, ...]:
    """Group rows by their key tuple; masks in first-occurrence order."""
    if not cols:
        return ((1 << n) - 1,)
    groups: dict[tuple[int, ...], int] = {}
    for i, key in enumerate(zip(*cols)):
        groups[key] = groups.get(key, 0) | (1 << i)
    return tuple(groups.values())


def partition(t: DecisionTable, attrs: Iterable[int | str]) -> Partition:
    """Partition of U induced by agreement on ``attrs``.

    ``attrs`` may contain condition attributes (by name or column index) and
    the decision attribute (by name).  The empty set induces the single-block
    partition.
    """
    cols, names = _key_columns(t, attrs)
    masks = _group_masks(cols, t.n_objects)
    return Partition(
        masks=masks,
        sizes=tuple(m.bit_count() for m in masks),
        n_objects=t.n_objects,
        source_attrs=names,
    )


def decision_partition(t: DecisionTable) -> Partition:
    """Partition of U by the decision attribute."""
    return partition(t, [t.decision_name])


def _check_subset_of_universe(p: Partition, x: int) -> None:
    if x & ~p.universe():
        raise ValueError("object set contains indices outside the universe")


def lower_approx(p: Partition, x: int) -> int:
    """Union of blocks fully contained in x."""
    _check_subset_of_universe(p, x)
    out = 0
    for m in p.masks:
        if m & x == m:
            out |= m
    return out


def upper_approx(p: Partition, x: int) -> int:
    """Union of blocks intersecting x."""
    _check_subset_of_universe(p, x)
    out = 0
    for m in p.masks:
        if m & x:
            out |= m
    return out


def regions(p: Partition, x: int) -> RegionTriple:
    """Positive, negative and boundary regions of x under p."""
    lo = lower_approx(p, x)
    up = upper_approx(p, x)
    return RegionTriple(positive=lo, negative=p.universe() & ~up, boundary=up & ~lo)


def positive_region(t: DecisionTable, attrs: Iterable[int | str]) -> int:
    """Objects whose block under ``attrs`` is decision-pure (as a bitmask).

    Equals the union over decision classes Y of the lower approximation of Y
    in the ``attrs`` partition; computed in one grouping pass.
    """
    for a in attrs:
        if isinstance(a, str) and a == t.decision_name:
            raise UnknownAttribute("positive region takes condition attributes only")
    cols, _ = _key_columns(t, attrs)
    dec = t.decisions.tolist()
    if not cols:
        return t.universe_mask if len(set(dec)) == 1 else 0
    first: dict[tuple[int, ...], int] = {}
    mask: dict[tuple[int, ...], int] = {}
    pure: dict[tuple[int, ...], bool] = {}
    for i, key in enumerate(zip(*cols)):
        if key in first:
            mask[key] |= 1 << i
            if dec[i] != first[key]:
                pure[key] = False
        else:
            first[key] = dec[i]
            mask[key] = 1 << i
            pure[key] = True
    out = 0
    for key, ok in pure.items():
        if ok:
            out |= mask[key]
    return out
