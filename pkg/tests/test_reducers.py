import numpy as np
import pytest

from rsreduct import (
    SpsParams,
    build_matrix,
    core,
    positive_region,
    prune_reduct,
    reduce_discern,
    reduce_hu,
    reduce_mibark,
    reduce_srs,
)
from rsreduct.errors import InconsistentTable, TooManyAttributes

from conftest import make_table, random_consistent_table

GREEDY = [reduce_hu, reduce_mibark, reduce_srs]

# Four objects whose last two attributes are the complements of the first
# two; no pair of decision-discernible objects differs in a single attribute,
# so the core is empty.  With the parity decision every single attribute is
# useless on its own (zero significance everywhere).
COMPLEMENT_CELLS = [[0, 0, 1, 1], [0, 1, 1, 0], [1, 0, 0, 1], [1, 1, 0, 0]]
PARITY = [0, 1, 1, 0]
CONJUNCTION = [0, 0, 0, 1]


def test_t1_all_greedy_stop_at_core(t1):
    for fn in GREEDY:
        res = fn(t1)
        assert res.reduct == ("a",)
        assert res.trace[0].branch == "core"
        assert res.trace[0].chosen == ("a",)
        assert len(res.trace) == 1
        assert res.stats.dependency == 1.0
        assert res.stats.rule_count == 2


def test_t1_discern(t1):
    results = reduce_discern(t1)
    assert len(results) == 1
    assert results[0].reduct == ("a",)
    assert results[0].algorithm == "discern"


def test_discern_all_minimal():
    t = make_table([[0, 0], [1, 1], [0, 0], [1, 1]], [0, 1, 0, 1], names=("a", "a2"))
    results = reduce_discern(t)
    assert {r.reduct for r in results} == {("a",), ("a2",)}


def test_discern_constant_decision():
    t = make_table([[0, 1], [1, 0]], [0, 0])
    results = reduce_discern(t)
    assert len(results) == 1
    assert results[0].reduct == ()
    assert results[0].stats.rule_count == 1


def test_discern_limit():
    t = make_table(np.zeros((2, 3), dtype=int), [0, 0])
    with pytest.raises(TooManyAttributes):
        reduce_discern(t, limit=2)


def test_inconsistent_rejected_by_all():
    t = make_table([[0, 0], [0, 0]], [0, 1])
    for fn in GREEDY:
        with pytest.raises(InconsistentTable):
            fn(t)
    with pytest.raises(InconsistentTable):
        reduce_discern(t)


def test_balloons_stop_at_core(yellow_small, adult_stretch):
    for fn in GREEDY:
        assert fn(yellow_small).reduct == ("color", "size")
        assert fn(adult_stretch).reduct == ("act", "age")
    res = reduce_srs(adult_stretch)
    assert res.stats.spatial_similarity == pytest.approx(0.8386, abs=5e-4)


def test_greedy_reducts_preserve_positive_region():
    rng = np.random.default_rng(23)
    for _ in range(40):
        t = random_consistent_table(rng, max_objects=20, max_attrs=5)
        for fn in GREEDY:
            res = fn(t)
            assert positive_region(t, res.reduct) == t.universe_mask
            assert core(build_matrix(t)) <= set(res.reduct)


def test_determinism(adult_stretch):
    for fn in GREEDY:
        a, b = fn(adult_stretch), fn(adult_stretch)
        assert a.reduct == b.reduct
        assert [s.chosen for s in a.trace] == [s.chosen for s in b.trace]
        assert [s.scores for s in a.trace] == [s.scores for s in b.trace]


def test_zero_progress_fallback_refines_by_block_count():
    t = make_table(COMPLEMENT_CELLS, PARITY)
    res = reduce_hu(t)
    assert res.trace[0].chosen == ()  # empty core
    first = res.trace[1]
    assert first.branch == "fallback"
    assert first.measure == "blocks"
    assert set(first.rejected.values()) == {0.0}
    assert first.chosen == ("c0",)  # all candidates tie at 2 blocks
    assert res.reduct == ("c0", "c1")
    assert positive_region(t, res.reduct) == t.universe_mask


def test_zero_progress_fallback_mibark():
    t = make_table(COMPLEMENT_CELLS, PARITY)
    res = reduce_mibark(t)
    assert res.trace[1].measure == "blocks"
    assert positive_region(t, res.reduct) == t.universe_mask


def test_srs_guard_chain_at_alpha_zero():
    # alpha=0 turns the spatial gain into beta * significance, which is flat
    # here, so the step runs all the way down to the block-count rule
    t = make_table(COMPLEMENT_CELLS, PARITY)
    res = reduce_srs(t, SpsParams.from_alpha(0.0))
    assert res.trace[1].branch == "fallback"
    assert res.trace[1].measure == "blocks"
    assert positive_region(t, res.reduct) == t.universe_mask


def test_srs_shape_branch_on_parity_with_positive_alpha():
    t = make_table(COMPLEMENT_CELLS, PARITY)
    res = reduce_srs(t, SpsParams.from_alpha(0.5))
    assert res.trace[1].branch == "sps"
    assert res.trace[1].measure == "sigsps"


def test_srs_significance_fallback_branch():
    # pure shape weighting: every candidate lowers the cosine, so the step
    # falls back to positive-region significance
    t = make_table(COMPLEMENT_CELLS, CONJUNCTION)
    res = reduce_srs(t, SpsParams.from_alpha(1.0))
    steps = [s for s in res.trace if s.branch == "fallback"]
    assert steps, "expected at least one fallback step"
    assert all(s.measure == "sig" for s in steps)
    assert all(max(s.rejected.values()) <= 0.0 for s in steps)
    assert res.reduct == ("c0", "c1")


def test_srs_alpha_zero_orders_like_significance():
    # with no shape weight the primary gain is beta * significance, so every
    # "sps" step must pick a significance maximizer
    from rsreduct import significance

    rng = np.random.default_rng(5)
    for _ in range(20):
        t = random_consistent_table(rng, max_objects=16, max_attrs=4)
        res = reduce_srs(t, SpsParams.from_alpha(0.0))
        chosen_so_far = list(res.trace[0].chosen)
        for step in res.trace[1:]:
            if step.branch == "sps":
                sig = {a: significance(t, a, chosen_so_far) for a in step.scores}
                assert sig[step.chosen[0]] == pytest.approx(max(sig.values()), abs=1e-12)
            chosen_so_far.extend(step.chosen)


def test_greedy_supersets_of_some_minimal_reduct():
    rng = np.random.default_rng(29)
    for _ in range(25):
        t = random_consistent_table(rng, max_objects=16, max_attrs=5)
        minimal = {frozenset(r.reduct) for r in reduce_discern(t)}
        for fn in GREEDY:
            red = frozenset(fn(t).reduct)
            assert any(m <= red for m in minimal)


def test_prune_reduct():
    # c2 duplicates the decision; greedy may still pick up extras elsewhere
    t = make_table(COMPLEMENT_CELLS, PARITY)
    res = reduce_hu(t)
    pruned = prune_reduct(t, res.reduct)
    assert set(pruned) <= set(res.reduct)
    assert positive_region(t, pruned) == t.universe_mask


def test_trace_scores_cover_all_candidates():
    t = make_table(COMPLEMENT_CELLS, CONJUNCTION)
    res = reduce_srs(t, SpsParams.from_alpha(1.0))
    for step in res.trace[1:]:
        assert set(step.scores) <= {"c0", "c1", "c2", "c3"}
        assert step.chosen[0] in step.scores
