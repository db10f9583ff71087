"""Walk through the approximation-space primitives on a 4-object toy table.

Objects u1..u4 carry two binary condition attributes a, b and a binary
decision d.  Attribute a alone already separates the two decision classes.
"""

from pathlib import Path

import rsreduct as rs

DATA = Path(__file__).resolve().parents[1] / "data"

t = rs.load_csv(DATA / "t1.csv", decision="d", id_column="id")
print(f"universe: {t.object_ids}, conditions: {t.condition_names}, decision: {t.decision_name}")


def show(mask):
    return "{" + ", ".join(t.object_ids[i] for i in rs.indices_from_mask(mask)) + "}"


# Equivalence classes of agreement on {a}: u1,u2 share a=0, u3,u4 share a=1.
p = rs.partition(t, ["a"])
print("\npartition by {a}:")
for mask, size in zip(p.masks, p.sizes):
    print(f"  block {show(mask)} (size {size})")

# Approximating the target set X = {u1, u2} from the blocks of p.
x = rs.mask_from_indices([0, 1])
print(f"\ntarget X = {show(x)}")
print(f"  lower approximation: {show(rs.lower_approx(p, x))}")
print(f"  upper approximation: {show(rs.upper_approx(p, x))}")
r = rs.regions(p, x)
print(f"  positive {show(r.positive)}, negative {show(r.negative)}, boundary {show(r.boundary)}")

# The coarsest partition (no attributes) cannot decide anything: every object
# sits in the boundary of any proper subset.
r0 = rs.regions(rs.partition(t, []), rs.mask_from_indices([0]))
print(f"\nunder the empty attribute set, boundary of {{u1}} = {show(r0.boundary)}")

# Positive region of the decision: {a} is enough, {b} is useless.
print(f"\nPOS wrt {{a}}: {show(rs.positive_region(t, ['a']))}  (dependency {rs.dependency(t, ['a'])})")
print(f"POS wrt {{b}}: {show(rs.positive_region(t, ['b']))}  (dependency {rs.dependency(t, ['b'])})")
