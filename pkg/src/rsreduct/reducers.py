"""The four reduction algorithms over a shared greedy skeleton.

All greedy reducers seed from the attribute core, then add one attribute per
step until their stopping test holds:

* positive-region significance, stopping when the reduct's positive region
  matches the full condition set's;
* mutual-information gain, stopping when the reduct's mutual information
  with the decision matches the full set's (within a tolerance);
* spatial score gain with a significance fallback, stopping on the positive
  region.

Ties are broken by column order, and when no candidate scores above zero the
step falls back to the candidate refining the partition into the most blocks,
which guarantees strict progress and hence termination.  The exhaustive
variant enumerates every minimal reduct from the discernibility function.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping

from .approx import decision_partition, partition, positive_region
from .dataset import DecisionTable
from .discernibility import all_reducts, build_matrix, table_core
from .errors import InconsistentTable
from .metrics import DEFAULT_PARAMS, SpsParams, dependency, spatial_similarity, sps
from .rules import rule_count


@dataclass(frozen=True)
class TraceStep:
    """One decision point of a reducer run.

    branch is "core" for the seeding step, "sps" when the algorithm's primary
    measure made the choice, "fallback" otherwise.  measure names the scoring
    function actually used ("core", "sig", "sgf", "sigsps", "blocks");
    scores maps each candidate to its value under that measure, and rejected
    keeps the primary scores of a step that fell through to a fallback.
    """

    index: int
    branch: str
    measure: str
    chosen: tuple[str, ...]
    scores: Mapping[str, float] | None = None
    rejected: Mapping[str, float] | None = None


@dataclass(frozen=True)
class ReductStats:
    dependency: float
    spatial_similarity: float
    rule_count: int
    wall_time_ms: float


@dataclass(frozen=True)
class ReductResult:
    """Ordered reduct (core first, then additions in selection order) + trace."""

    algorithm: str
    reduct: tuple[str, ...]
    trace: tuple[TraceStep, ...]
    stats: ReductStats


def _consistent_positive(t: DecisionTable) -> int:
    pos_c = positive_region(t, range(t.n_conditions))
    if pos_c != t.universe_mask:
        raise InconsistentTable(
            "table is not compatible: some objects share all condition values "
            "but differ in decision"
        )
    return pos_c


def _core_indices(t: DecisionTable) -> list[int]:
    names = table_core(t)
    return sorted(t.condition_names.index(n) for n in names)


def _argmax(scores: dict[int, float]) -> int:
    """Candidate with the highest score; ties broken by column order."""
    best = -1
    best_score = None
    for a in sorted(scores):
        s = scores[a]
        if best_score is None or s > best_score:
            best, best_score = a, s
    return best


def _named(t: DecisionTable, scores: dict[int, float]) -> dict[str, float]:
    return {t.condition_names[a]: scores[a] for a in sorted(scores)}


def _block_count_scores(t: DecisionTable, r: list[int], cands: list[int]) -> dict[int, float]:
    return {a: float(partition(t, r + [a]).n_blocks) for a in cands}


def _finish(
    t: DecisionTable,
    algorithm: str,
    reduct_idx: list[int],
    trace: list[TraceStep],
    t0: float,
) -> ReductResult:
    names = tuple(t.condition_names[a] for a in reduct_idx)
    dep = dependency(t, reduct_idx)
    sim = spatial_similarity(partition(t, reduct_idx), decision_partition(t))
    n_rules = rule_count(t, reduct_idx)
    ms = (time.perf_counter() - t0) * 1000.0
    return ReductResult(
        algorithm=algorithm,
        reduct=names,
        trace=tuple(trace),
        stats=ReductStats(
            dependency=dep,
            spatial_similarity=sim,
            rule_count=n_rules,
            wall_time_ms=ms,
        ),
    )


def reduce_hu(t: DecisionTable) -> ReductResult:
    """Greedy reduction by positive-region significance."""
    t0 = time.perf_counter()
    pos_c = _consistent_positive(t)
    r = _core_indices(t)
    trace = [
        TraceStep(0, "core", "core", tuple(t.condition_names[a] for a in r))
    ]
    step = 1
    n = t.n_objects
    while positive_region(t, r) != pos_c:
        dep_r = positive_region(t, r).bit_count() / n
        cands = [a for a in range(t.n_conditions) if a not in r]
        sig = {
            a: positive_region(t, r + [a]).bit_count() / n - dep_r for a in cands
        }
        best = max(sig.values())
        if best > 0.0:
            a = _argmax(sig)
            trace.append(
                TraceStep(step, "sps", "sig", (t.condition_names[a],), _named(t, sig))
            )
        else:
            blocks = _block_count_scores(t, r, cands)
            a = _argmax(blocks)
            trace.append(
                TraceStep(
                    step,
                    "fallback",
                    "blocks",
                    (t.condition_names[a],),
                    _named(t, blocks),
                    rejected=_named(t, sig),
                )
            )
        r.append(a)
        step += 1
    return _finish(t, "hu", r, trace, t0)


def reduce_mibark(t: DecisionTable, tol: float = 1e-10) -> ReductResult:
    """Greedy reduction by mutual-information gain.

    The stopping comparison uses an absolute tolerance: exact floating-point
    equality of entropies is fragile.
    """
    from .metrics import conditional_entropy, entropy

    t0 = time.perf_counter()
    _consistent_positive(t)
    r = _core_indices(t)
    trace = [
        TraceStep(0, "core", "core", tuple(t.condition_names[a] for a in r))
    ]
    h_d = entropy(decision_partition(t))
    mi_c = h_d - conditional_entropy(t, range(t.n_conditions))
    step = 1
    while abs((h_d - conditional_entropy(t, r)) - mi_c) > tol:
        h_r = conditional_entropy(t, r)
        cands = [a for a in range(t.n_conditions) if a not in r]
        gains = {a: h_r - conditional_entropy(t, r + [a]) for a in cands}
        best = max(gains.values())
        if best > 0.0:
            a = _argmax(gains)
            trace.append(
                TraceStep(step, "sps", "sgf", (t.condition_names[a],), _named(t, gains))
            )
        else:
            blocks = _block_count_scores(t, r, cands)
            a = _argmax(blocks)
            trace.append(
                TraceStep(
                    step,
                    "fallback",
                    "blocks",
                    (t.condition_names[a],),
                    _named(t, blocks),
                    rejected=_named(t, gains),
                )
            )
        r.append(a)
        step += 1
    return _finish(t, "mibark", r, trace, t0)


def reduce_srs(t: DecisionTable, params: SpsParams = DEFAULT_PARAMS) -> ReductResult:
    """Greedy reduction by spatial-score gain with a significance fallback.

    Each step scores every candidate by the change in the convex spatial
    score; if the best gain is positive that candidate is added, otherwise
    the step falls back to positive-region significance (and, if that is
    also flat, to the partition-refinement rule).
    """
    t0 = time.perf_counter()
    pos_c = _consistent_positive(t)
    r = _core_indices(t)
    trace = [
        TraceStep(0, "core", "core", tuple(t.condition_names[a] for a in r))
    ]
    step = 1
    n = t.n_objects
    while positive_region(t, r) != pos_c:
        sps_r = sps(t, r, params)
        cands = [a for a in range(t.n_conditions) if a not in r]
        gains = {a: sps(t, r + [a], params) - sps_r for a in cands}
        if max(gains.values()) > 0.0:
            a = _argmax(gains)
            trace.append(
                TraceStep(
                    step, "sps", "sigsps", (t.condition_names[a],), _named(t, gains)
                )
            )
        else:
            dep_r = positive_region(t, r).bit_count() / n
            sig = {
                a: positive_region(t, r + [a]).bit_count() / n - dep_r for a in cands
            }
            if max(sig.values()) > 0.0:
                a = _argmax(sig)
                trace.append(
                    TraceStep(
                        step,
                        "fallback",
                        "sig",
                        (t.condition_names[a],),
                        _named(t, sig),
                        rejected=_named(t, gains),
                    )
                )
            else:
                blocks = _block_count_scores(t, r, cands)
                a = _argmax(blocks)
                trace.append(
                    TraceStep(
                        step,
                        "fallback",
                        "blocks",
                        (t.condition_names[a],),
                        _named(t, blocks),
                        rejected=_named(t, gains),
                    )
                )
        r.append(a)
        step += 1
    return _finish(t, "srs", r, trace, t0)


def reduce_discern(t: DecisionTable, limit: int = 20) -> tuple[ReductResult, ...]:
    """Every minimal reduct, via the discernibility function.

    Serves as the exhaustive oracle for the greedy methods; guarded by the
    attribute limit because enumeration is exponential in the worst case.
    """
    t0 = time.perf_counter()
    _consistent_positive(t)
    reducts = all_reducts(build_matrix(t), limit=limit)
    ordered = sorted(
        (sorted(t.condition_names.index(a) for a in red) for red in reducts),
        key=lambda idx: (len(idx), idx),
    )
    return tuple(_finish(t, "discern", idx, [], t0) for idx in ordered)


def prune_reduct(t: DecisionTable, reduct: tuple[str, ...]) -> tuple[str, ...]:
    """Drop attributes (latest additions first) whose removal preserves POS.

    Optional post-processing; the greedy algorithms themselves never prune,
    and benchmark attribute counts are reported without it by default.
    """
    pos_c = _consistent_positive(t)
    kept = list(reduct)
    for name in reversed(list(reduct)):
        trial = [a for a in kept if a != name]
        if positive_region(t, trial) == pos_c:
            kept = trial
    return tuple(kept)
