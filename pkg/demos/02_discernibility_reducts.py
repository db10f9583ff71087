"""Discernibility matrix, attribute core, and exhaustive reduct enumeration.

The xor table needs both attributes (the decision is their parity), so the
core is {a, b} and the only reduct is the full set.  The toy t1 table
reduces to {a} alone.
"""

from pathlib import Path

import rsreduct as rs

DATA = Path(__file__).resolve().parents[1] / "data"

for name, kwargs in [("t1.csv", dict(decision="d", id_column="id")), ("xor.csv", {})]:
    t = rs.load_csv(DATA / name, **kwargs)
    m = rs.build_matrix(t)
    print(f"{name}: {t.n_objects} objects, {t.n_conditions} conditions")
    for (i, j), attrs in sorted(m.entries.items()):
        names = ", ".join(sorted(m.attr_names[a] for a in attrs))
        print(f"  ({t.object_ids[i]}, {t.object_ids[j]}) discerned by {{{names}}}")
    print(f"  core: {sorted(rs.core(m))}")
    print(f"  all minimal reducts: {[sorted(r) for r in rs.all_reducts(m)]}")
    # the brute-force oracle enumerates all 2^|C| subsets and agrees
    print(f"  brute force agrees: {rs.all_reducts(m) == rs.brute_force_reducts(t)}")
    print()
