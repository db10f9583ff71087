"""rsreduct: rough-set attribute reduction over categorical decision tables.

Load a table, inspect its approximation regions, compute reducts with the
discernibility function or one of three greedy heuristics (positive-region
significance, mutual information, spatial partition-shape score), extract
exact decision rules, and benchmark the algorithms against each other.
"""

from .approx import (
    Partition,
    RegionTriple,
    decision_partition,
    indices_from_mask,
    lower_approx,
    mask_from_indices,
    partition,
    positive_region,
    regions,
    upper_approx,
)
from .bench import (
    BenchConfig,
    BenchReport,
    BenchRow,
    DatasetSpec,
    emit_report,
    load_config,
    run_bench,
    sweep_alpha,
)
from .dataset import DecisionTable, check_consistency, is_consistent, load_csv
from .discernibility import DiscernMatrix, all_reducts, build_matrix, core, table_core
from .metrics import (
    DEFAULT_PARAMS,
    SpsParams,
    conditional_entropy,
    dependency,
    entropy,
    mutual_information,
    sgf,
    sig_sps,
    significance,
    spatial_similarity,
    sps,
)
from .oracle import brute_force_reducts, naive_partition
from .reducers import (
    ReductResult,
    ReductStats,
    TraceStep,
    prune_reduct,
    reduce_discern,
    reduce_hu,
    reduce_mibark,
    reduce_srs,
)
from .rules import Rule, extract_rules, format_rule, rule_count, write_rules

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "DEFAULT_PARAMS",
    "DatasetSpec",
    "DecisionTable",
    "DiscernMatrix",
    "Partition",
    "RegionTriple",
    "ReductResult",
    "ReductStats",
    "Rule",
    "SpsParams",
    "TraceStep",
    "all_reducts",
    "brute_force_reducts",
    "build_matrix",
    "check_consistency",
    "conditional_entropy",
    "core",
    "decision_partition",
    "dependency",
    "emit_report",
    "entropy",
    "extract_rules",
    "format_rule",
    "indices_from_mask",
    "is_consistent",
    "load_config",
    "load_csv",
    "lower_approx",
    "mask_from_indices",
    "mutual_information",
    "naive_partition",
    "partition",
    "positive_region",
    "prune_reduct",
    "reduce_discern",
    "reduce_hu",
    "reduce_mibark",
    "reduce_srs",
    "regions",
    "rule_count",
    "run_bench",
    "sgf",
    "sig_sps",
    "significance",
    "spatial_similarity",
    "sps",
    "sweep_alpha",
    "table_core",
    "upper_approx",
    "write_rules",
]
