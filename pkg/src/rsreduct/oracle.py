"""Brute-force reference implementations used by tests and `--verify`.

Everything here recomputes results along an independent code path: pairwise
O(|U|^2) grouping instead of hashing, full subset enumeration instead of the
discernibility function, plain-Python sums instead of the metric routines.
Performance is irrelevant by design.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Sequence

from .approx import Partition, positive_region
from .dataset import DecisionTable
from .errors import TooManyAttributes


def brute_force_reducts(t: DecisionTable, limit: int = 12) -> frozenset[frozenset[str]]:
    """All minimal subsets whose positive region is the whole universe.

    Enumerates all 2^|C| subsets.  By positive-region monotonicity it is
    enough to check the immediate subsets for the minimality test.
    """
    c = t.n_conditions
    if c > limit:
        raise TooManyAttributes(f"{c} attributes exceed the brute-force limit {limit}")
    universe = t.universe_mask
    pos_full: dict[frozenset[int], bool] = {}
    for size in range(c + 1):
        for subset in combinations(range(c), size):
            pos_full[frozenset(subset)] = (
                positive_region(t, subset) == universe
            )
    out: set[frozenset[str]] = set()
    for subset, full in pos_full.items():
        if not full:
            continue
        if any(pos_full[subset - {a}] for a in subset):
            continue
        out.add(frozenset(t.condition_names[a] for a in subset))
    return frozenset(out)


def naive_partition(t: DecisionTable, attrs: Iterable[int | str]) -> Partition:
    """Pairwise-agreement grouping; same contract as approx.partition."""
    idx = t.resolve_conditions(attrs)
    rows = t.cells[:, list(idx)].tolist() if idx else [[] for _ in range(t.n_objects)]
    blocks: list[list[int]] = []
    for i in range(t.n_objects):
        placed = False
        for block in blocks:
            j = block[0]
            if all(rows[i][k] == rows[j][k] for k in range(len(idx))):
                block.append(i)
                placed = True
                break
        if not placed:
            blocks.append([i])
    masks = []
    for block in blocks:
        m = 0
        for i in block:
            m |= 1 << i
        masks.append(m)
    return Partition(
        masks=tuple(masks),
        sizes=tuple(len(b) for b in blocks),
        n_objects=t.n_objects,
        source_attrs=tuple(t.condition_names[j] for j in idx),
    )


def naive_entropy(block_sizes: Sequence[int]) -> float:
    """Direct-summation Shannon entropy of a block-size vector, in bits."""
    n = sum(block_sizes)
    total = 0.0
    for s in block_sizes:
        total += (s / n) * math.log2(n / s)
    return total


def naive_conditional_entropy(t: DecisionTable, cond_attrs: Iterable[int | str]) -> float:
    """H(decision | cond_attrs) via explicit double loop over blocks and values."""
    p = naive_partition(t, cond_attrs)
    dec = t.decisions.tolist()
    values = sorted(set(dec))
    n = t.n_objects
    total = 0.0
    for block in p.blocks():
        size = len(block)
        for v in values:
            c = sum(1 for i in block if dec[i] == v)
            if c:
                total += (size / n) * (c / size) * math.log2(size / c)
    return total


def naive_cosine(sizes_a: Sequence[int], sizes_b: Sequence[int]) -> float:
    """Cosine of descending-sorted, zero-padded cardinality vectors."""
    a = sorted(sizes_a, reverse=True)
    b = sorted(sizes_b, reverse=True)
    width = max(len(a), len(b))
    a = a + [0] * (width - len(a))
    b = b + [0] * (width - len(b))
    dot = 0.0
    na = 0.0
    nb = 0.0
    for x, y in zip(a, b):
        dot += x * y
        na += x * x
        nb += y * y
    return dot / (math.sqrt(na) * math.sqrt(nb))
