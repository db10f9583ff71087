"""Decision-rule extraction from a reduct.

Each block of the reduct's partition yields exactly one rule, so the number
of rules equals the block count of that partition; rules are exact because
only consistent tables and complete reducts are accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .approx import indices_from_mask, partition
from .dataset import DecisionTable
from .errors import IncompleteReduct


@dataclass(frozen=True)
class Rule:
    """IF antecedent THEN decision, with the number of supporting objects."""

    antecedent: tuple[tuple[str, int], ...]
    consequent: int
    support: int


def extract_rules(t: DecisionTable, reduct: Iterable[int | str]) -> list[Rule]:
    """One exact rule per block of the reduct's partition, canonical order.

    Raises IncompleteReduct if some block carries more than one decision
    value (the subset does not preserve the positive region).
    """
    reduct = list(reduct)
    idx = [t.condition_index(a) for a in reduct]
    names = [t.condition_names[j] for j in idx]
    p = partition(t, idx)
    dec = t.decisions.tolist()
    cells = t.cells
    rules: list[Rule] = []
    for mask, size in zip(p.masks, p.sizes):
        members = indices_from_mask(mask)
        first = members[0]
        d = dec[first]
        for i in members[1:]:
            if dec[i] != d:
                raise IncompleteReduct(
                    f"objects {first} and {i} agree on the reduct but differ in decision"
                )
        antecedent = tuple((name, int(cells[first, j])) for name, j in zip(names, idx))
        rules.append(Rule(antecedent=antecedent, consequent=d, support=size))
    return rules


def rule_count(t: DecisionTable, reduct: Iterable[int | str]) -> int:
    """Number of exact rules the reduct induces (= its partition's block count)."""
    return len(extract_rules(t, reduct))


def format_rule(t: DecisionTable, rule: Rule) -> str:
    """Human-readable rule line with values decoded to the original strings."""
    if rule.antecedent:
        cond = " AND ".join(
            f"{name}={t.decode(name, code)}" for name, code in rule.antecedent
        )
    else:
        cond = "TRUE"
    dec = t.decode(t.decision_name, rule.consequent)
    return f"IF {cond} THEN {t.decision_name}={dec}  [support={rule.support}]"


def write_rules(t: DecisionTable, rules: Iterable[Rule], path: str | Path) -> None:
    """Write one formatted rule per line."""
    lines = [format_rule(t, r) for r in rules]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
