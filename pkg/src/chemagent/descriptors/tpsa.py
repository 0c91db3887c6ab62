"""Topological polar surface area: summed N/O environment contributions,
with S/P environments included only on request.  N/O atoms matching no
environment contribute 0 and are reported as unmatched."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..molkit import Molecule
from ..molkit.match import anchored_match
from .tables import tpsa_table

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TpsaResult:
    value: float
    contributions: tuple[tuple[int, float], ...]  # (atom index, contribution)
    unmatched: tuple[int, ...]                    # polar atoms with no rule


def tpsa_details(
    mol: Molecule, include_s_p: bool = False, data_dir: str | None = None
) -> TpsaResult:
    table = tpsa_table(data_dir)
    rules = table.no_rules + (table.sp_rules if include_s_p else ())
    wanted = {"N", "O"} | ({"S", "P"} if include_s_p else set())
    polar = [i for i, a in enumerate(mol.atoms) if a.symbol in wanted]
    contributions = []
    matched: set[int] = set()
    for rule in rules:
        for idx in polar:
            if idx in matched:
                continue
            if rule.elements is not None and mol.atoms[idx].symbol not in rule.elements:
                continue
            if anchored_match(rule.pattern, mol, idx):
                matched.add(idx)
                contributions.append((idx, rule.value))
    unmatched = tuple(i for i in polar if i not in matched)
    if unmatched:
        log.warning(
            "TPSA: %d polar atom(s) in %r matched no environment and contribute 0",
            len(unmatched), mol.source_text,
        )
    return TpsaResult(
        value=sum(v for _, v in contributions),
        contributions=tuple(sorted(contributions)),
        unmatched=unmatched,
    )


def tpsa(mol: Molecule, include_s_p: bool = False, data_dir: str | None = None) -> float:
    return tpsa_details(mol, include_s_p, data_dir).value
