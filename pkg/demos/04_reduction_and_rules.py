"""Run all reducers on a balloons table and extract the decision rules.

Every algorithm stops at the 2-attribute core here; the interesting part is
the trace (which branch chose each attribute) and the rule list, which has
one rule per block of the reduct's partition.
"""

from pathlib import Path

import rsreduct as rs

DATA = Path(__file__).resolve().parents[1] / "data"

t = rs.load_csv(DATA / "yellow-small.csv", decision="inflated")

for fn in (rs.reduce_hu, rs.reduce_mibark, rs.reduce_srs):
    res = fn(t)
    print(f"{res.algorithm}: reduct {list(res.reduct)}")
    for step in res.trace:
        detail = "" if step.scores is None else f" scores={dict(step.scores)}"
        print(f"  step {step.index}: {step.branch}/{step.measure} -> {step.chosen}{detail}")
    print(
        f"  dependency={res.stats.dependency:.2f} "
        f"similarity={res.stats.spatial_similarity:.4f} "
        f"rules={res.stats.rule_count}"
    )
    print()

print("rules from the spatial reduct:")
res = rs.reduce_srs(t)
for rule in rs.extract_rules(t, res.reduct):
    print(" ", rs.format_rule(t, rule))

# compare with the exhaustive enumeration: the greedy answer is minimal here
minimal = [sorted(r.reduct) for r in rs.reduce_discern(t)]
print(f"\nminimal reducts by enumeration: {minimal}")
