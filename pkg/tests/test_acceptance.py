"""End-to-end acceptance criteria, one test per criterion.

Each test pins its tolerances and sample counts; a summary line per criterion
is printed at the end of the pytest run (see conftest).  Criteria that need
the user-fetched UCI files skip with a pointer when a file is absent.
"""

import time
from itertools import combinations

import numpy as np
import pytest

import rsreduct as rs
from rsreduct.bench import BenchConfig, divergence_notes, sweep_alpha
from rsreduct.oracle import naive_conditional_entropy, naive_cosine, naive_entropy

from conftest import (
    FIXTURES_CONF,
    random_consistent_table,
    random_table,
    uci_spec,
)

pytestmark = pytest.mark.acceptance

ALPHA_GRID = tuple(round(i / 10, 1) for i in range(11))


def _spec_or_skip(name):
    spec = uci_spec(name)
    if not spec.path.exists():
        pytest.skip(f"dataset {name} not fetched ({spec.path}); see data/uci/README.md")
    return spec


def test_region_algebra_suite():
    """Approximation sandwich, region partitioning and POS monotonicity
    on 500 random tables (<= 30 objects, <= 6 attributes, <= 4 values)."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    for _ in range(500):
        t = random_table(rng)
        universe = t.universe_mask
        smaller = [a for a in range(t.n_conditions) if rng.integers(2)]
        larger = sorted(set(smaller) | {a for a in range(t.n_conditions) if rng.integers(2)})
        p = rs.partition(t, smaller)
        for _ in range(3):
            x = int(rng.integers(0, universe + 1))
            lo = rs.lower_approx(p, x)
            up = rs.upper_approx(p, x)
            assert lo & ~x == 0, "lower approximation must stay inside the set"
            assert x & ~up == 0, "the set must stay inside the upper approximation"
            r = rs.regions(p, x)
            assert r.positive | r.negative | r.boundary == universe
            assert r.positive & r.negative == 0
            assert r.positive & r.boundary == 0
            assert r.negative & r.boundary == 0
        pos_small = rs.positive_region(t, smaller)
        pos_large = rs.positive_region(t, larger)
        assert pos_small & ~pos_large == 0, "positive region must grow with attrs"
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"region algebra suite took {elapsed:.1f}s"


def test_partition_growth_and_rule_count_identity():
    """Block counts never shrink when attributes are added (all R, a); on
    consistent tables every complete reduct induces exactly one rule per
    block of its partition.  Zero violations over 500 random tables."""
    rng = np.random.default_rng(2025)
    for i in range(500):
        t = random_table(rng)
        c = t.n_conditions
        n_blocks = {}
        for size in range(c + 1):
            for subset in combinations(range(c), size):
                n_blocks[subset] = rs.partition(t, subset).n_blocks
        for subset, blocks in n_blocks.items():
            for a in range(c):
                if a in subset:
                    continue
                grown = tuple(sorted(subset + (a,)))
                assert blocks <= n_blocks[grown], (subset, a)
        if not rs.is_consistent(t):
            continue
        reducts = [r.reduct for r in rs.reduce_discern(t)]
        reducts += [fn(t).reduct for fn in (rs.reduce_hu, rs.reduce_mibark, rs.reduce_srs)]
        for reduct in reducts:
            assert rs.rule_count(t, reduct) == rs.partition(t, reduct).n_blocks


def test_oracle_equivalence():
    """Discernibility-function reducts equal brute-force enumeration, the
    core is the intersection of all reducts, and every greedy reduct covers
    a minimal reduct and restores the full positive region, over 200 random
    consistent tables with <= 10 attributes."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(2026)
    for _ in range(200):
        t = random_consistent_table(rng, max_objects=30, max_attrs=10)
        matrix = rs.build_matrix(t)
        reducts = rs.all_reducts(matrix, limit=10)
        assert reducts == rs.brute_force_reducts(t, limit=10)
        assert rs.core(matrix) == frozenset.intersection(*reducts)
        greedy = [rs.reduce_hu(t).reduct, rs.reduce_mibark(t).reduct]
        greedy += [
            rs.reduce_srs(t, rs.SpsParams.from_alpha(a)).reduct
            for a in (0.0, 0.25, 0.5, 0.75, 1.0)
        ]
        for reduct in greedy:
            assert rs.positive_region(t, reduct) == t.universe_mask
            assert any(m <= frozenset(reduct) for m in reducts)
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0, f"oracle equivalence suite took {elapsed:.1f}s"


def test_metric_oracles():
    """Entropy, conditional entropy and cosine agree with independent naive
    recomputation to 1e-12 over 1000 random partitions; similarity stays in
    (0, 1]; zero-weight spatial scores collapse exactly."""
    rng = np.random.default_rng(2027)
    for _ in range(1000):
        t = random_table(rng, max_objects=25, max_attrs=5)
        attrs = [a for a in range(t.n_conditions) if rng.integers(2)]
        p = rs.partition(t, attrs)
        q = rs.decision_partition(t)

        assert abs(rs.entropy(p) - naive_entropy(p.sizes)) < 1e-12
        assert abs(
            rs.conditional_entropy(t, attrs) - naive_conditional_entropy(t, attrs)
        ) < 1e-12
        sim = rs.spatial_similarity(p, q)
        assert abs(sim - naive_cosine(p.sizes, q.sizes)) < 1e-12
        assert 0.0 < sim <= 1.0

        assert rs.sps(t, attrs, rs.SpsParams(0.0, 1.0)) == rs.dependency(t, attrs)
        assert rs.sps(t, attrs, rs.SpsParams(1.0, 0.0)) == sim


def test_spatial_fallback_argmax_agreement():
    """Whenever the spatial reducer falls through to significance, the
    significance argmax set coincides with the positive-region-ratio argmax
    set, over 200 random tables that reach the fallback branch."""
    rng = np.random.default_rng(2028)
    hits = 0
    attempts = 0
    while hits < 200:
        attempts += 1
        assert attempts < 5000, f"only {hits} fallback tables found"
        t = random_consistent_table(rng, max_objects=24, max_attrs=6)
        alpha = (1.0, 0.9, 0.75)[attempts % 3]
        res = rs.reduce_srs(t, rs.SpsParams.from_alpha(alpha))
        fallback_steps = [s for s in res.trace[1:] if s.branch == "fallback"]
        if not fallback_steps:
            continue
        hits += 1
        r = list(res.trace[0].chosen)
        n = t.n_objects
        for step in res.trace[1:]:
            if step.branch == "fallback":
                assert max(step.rejected.values()) <= 0.0
                cands = list(step.rejected)
                sig = {a: rs.significance(t, a, r) for a in cands}
                ratio = {
                    a: rs.positive_region(t, r + [a]).bit_count() / n for a in cands
                }
                best_sig = max(sig.values())
                best_ratio = max(ratio.values())
                argmax_sig = {a for a, v in sig.items() if v == best_sig}
                argmax_ratio = {a for a, v in ratio.items() if v == best_ratio}
                assert argmax_sig == argmax_ratio
            r.extend(step.chosen)


@pytest.mark.parametrize(
    "name,expect_attrs,expect_sim",
    [("car", 6, 0.03), ("breast-cancer", 9, 0.20)],
)
def test_reference_hard_rows(name, expect_attrs, expect_sim):
    """Full-set reducts: every algorithm reports the published attribute
    count and similarity (+-0.01) on the no-reduction datasets, each within
    60 seconds."""
    spec = _spec_or_skip(name)
    t = spec.load()
    for fn in (rs.reduce_hu, rs.reduce_mibark, rs.reduce_srs):
        t0 = time.perf_counter()
        res = fn(t)
        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0, f"{name}/{res.algorithm} took {elapsed:.1f}s"
        assert len(res.reduct) == expect_attrs, (name, res.algorithm, res.reduct)
        sim = rs.spatial_similarity(
            rs.partition(t, res.reduct), rs.decision_partition(t)
        )
        assert abs(sim - expect_sim) <= 0.01, (name, res.algorithm, sim)


SOFT_ROWS = {
    "yellow-small": dict(attrs=(2, 2), min_sim=0.82, max_sim=0.86, strict=True),
    "adult+stretch": dict(attrs=(2, 2), min_sim=0.82, max_sim=0.86, strict=True),
    "zoo": dict(attrs=(9, 13), min_sim=0.90, max_sim=1.0, strict=False),
    "soybean-small": dict(attrs=(0, 35), min_sim=0.85, max_sim=1.0, strict=False),
}


@pytest.mark.parametrize("name", list(SOFT_ROWS))
def test_reference_soft_rows(name):
    """Alpha-swept spatial reduction reaches the published reduct size and
    similarity band for some alpha; rows the sweep cannot match must at
    least produce a bench divergence note naming the closest run."""
    spec = _spec_or_skip(name)
    want = SOFT_ROWS[name]
    config = BenchConfig(datasets=[spec], algorithms=("srs",))
    report = sweep_alpha(config, ALPHA_GRID)
    rows = [r for r in report.rows if r.algorithm == "srs"]
    assert len(rows) == len(ALPHA_GRID)
    lo, hi = want["attrs"]
    matched = [
        r
        for r in rows
        if lo <= r.n_attributes <= hi
        and want["min_sim"] <= r.spatial_similarity <= want["max_sim"]
    ]
    if matched:
        return
    if want["strict"]:
        pytest.fail(f"{name}: no swept alpha matched; rows={rows}")
    notes = [n for n in report.notes if n.startswith(f"divergence {name}/srs")]
    assert notes, f"{name}: unmatched and no divergence note emitted"
    print(f"soft row {name} passed via divergence note: {notes[0]}")


def test_bench_determinism():
    """Two consecutive bench runs over the fixture suite emit identical CSV
    once the runtime column is dropped."""
    def csv_without_runtime(report, path):
        rs.emit_report(report, "csv", path)
        lines = path.read_text().splitlines()
        return ["," .join(line.split(",")[:-1]) for line in lines], report.notes

    import tempfile
    from pathlib import Path

    config = rs.load_config(FIXTURES_CONF)
    with tempfile.TemporaryDirectory() as tmp:
        a = csv_without_runtime(rs.run_bench(config), Path(tmp) / "a.csv")
        b = csv_without_runtime(rs.run_bench(rs.load_config(FIXTURES_CONF)), Path(tmp) / "b.csv")
    assert a == b
