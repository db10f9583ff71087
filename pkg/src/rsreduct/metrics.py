"""Scalar measures driving the greedy reducers.

Dependency degree and attribute significance (positive-region based),
entropy / conditional entropy / mutual information (base-2 logs), and the
partition-shape measures: cosine similarity of descending block-cardinality
vectors, the convex spatial score combining shape and dependency, and its
per-attribute gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .approx import Partition, decision_partition, indices_from_mask, partition, positive_region
from .dataset import DecisionTable
from .errors import AttributeAlreadyInSet, UniverseMismatch


@dataclass(frozen=True)
class SpsParams:
    """Weights of the spatial score: alpha for shape, beta for dependency.

    The weights must sum to 1 (convex combination).
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.alpha <= 1.0 and 0.0 <= self.beta <= 1.0):
            raise ValueError("weights must lie in [0, 1]")
        if abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise ValueError("weights must sum to 1")

    @classmethod
    def from_alpha(cls, alpha: float) -> "SpsParams":
        return cls(alpha=alpha, beta=1.0 - alpha)


DEFAULT_PARAMS = SpsParams(alpha=0.5, beta=0.5)


def dependency(t: DecisionTable, attrs: Iterable[int | str]) -> float:
    """Fraction of objects in the positive region of ``attrs``."""
    return positive_region(t, attrs).bit_count() / t.n_objects


def _as_new_candidate(t: DecisionTable, a: int | str, r: Iterable[int | str]) -> tuple[int, tuple[int, ...]]:
    ai = t.condition_index(a)
    ri = t.resolve_conditions(r)
    if ai in ri:
        raise AttributeAlreadyInSet(f"attribute {a!r} already in the subset")
    return ai, ri


def significance(t: DecisionTable, a: int | str, r: Iterable[int | str]) -> float:
    """Dependency gain from adding attribute ``a`` to subset ``r`` (>= 0)."""
    ai, ri = _as_new_candidate(t, a, r)
    return dependency(t, ri + (ai,)) - dependency(t, ri)


def entropy(p: Partition) -> float:
    """Shannon entropy of the block-size distribution, in bits."""
    n = p.n_objects
    return -sum((s / n) * math.log2(s / n) for s in p.sizes)


def conditional_entropy(t: DecisionTable, cond_attrs: Iterable[int | str]) -> float:
    """H(decision | cond_attrs) in bits; zero-probability terms contribute 0."""
    p = partition(t, cond_attrs)
    dec = t.decisions.tolist()
    n = t.n_objects
    h = 0.0
    for mask, size in zip(p.masks, p.sizes):
        counts: dict[int, int] = {}
        for i in indices_from_mask(mask):
            counts[dec[i]] = counts.get(dec[i], 0) + 1
        inner = 0.0
        for c in counts.values():
            q = c / size
            inner -= q * math.log2(q)
        h += (size / n) * inner
    return h


def sgf(t: DecisionTable, a: int | str, r: Iterable[int | str]) -> float:
    """Conditional-entropy drop from adding ``a`` to ``r`` (>= 0)."""
    ai, ri = _as_new_candidate(t, a, r)
    return conditional_entropy(t, ri) - conditional_entropy(t, ri + (ai,))


def mutual_information(t: DecisionTable, attrs: Iterable[int | str]) -> float:
    """I(attrs; decision) = H(decision) - H(decision | attrs), in bits."""
    return entropy(decision_partition(t)) - conditional_entropy(t, attrs)


def spatial_similarity(p: Partition, q: Partition) -> float:
    """Cosine of the descending block-cardinality vectors of two partitions.

    The shorter vector is zero-padded to the longer one's length, so a
    mismatch in block counts lowers the score; the result lies in (0, 1]
    because the largest blocks of both partitions are nonzero.
    """
    if p.n_objects != q.n_objects:
        raise UniverseMismatch(
            f"partitions cover different universes: {p.n_objects} vs {q.n_objects}"
        )
    a = sorted(p.sizes, reverse=True)
    b = sorted(q.sizes, reverse=True)
    width = max(len(a), len(b))
    a += [0] * (width - len(a))
    b += [0] * (width - len(b))
    if a == b:
        return 1.0
    dot = sum(x * y for x, y in zip(a, b))
    value = dot / math.sqrt(sum(x * x for x in a) * sum(y * y for y in b))
    return min(value, 1.0)


def sps(t: DecisionTable, attrs: Iterable[int | str], params: SpsParams = DEFAULT_PARAMS) -> float:
    """Convex spatial score of ``attrs`` against the decision.

    alpha * cosine(attrs partition, decision partition)
    + beta * dependency(attrs).
    """
    attrs = tuple(attrs)
    cos = spatial_similarity(partition(t, attrs), decision_partition(t))
    return params.alpha * cos + params.beta * dependency(t, attrs)


def sig_sps(
    t: DecisionTable,
    a: int | str,
    r: Iterable[int | str],
    params: SpsParams = DEFAULT_PARAMS,
) -> float:
    """Spatial-score gain from adding ``a`` to ``r``; may be negative."""
    ai, ri = _as_new_candidate(t, a, r)
    return sps(t, ri + (ai,), params) - sps(t, ri, params)
