"""Lipinski rule of five with the strict zero-violation reading: a molecule
passes only when all four bounds hold (MW <= 500, LogP <= 5, donors <= 5,
acceptors <= 10).  The common <=1-violation variant is deliberately not
used; per-rule detail is reported for transparency."""

from __future__ import annotations

from dataclasses import dataclass

from ..molkit import Molecule
from .basic import hb_acceptors, hb_donors, mol_weight
from .crippen import crippen_logp


@dataclass(frozen=True)
class LipinskiResult:
    passes: bool
    mw: float
    logp: float
    donors: int
    acceptors: int
    violations: tuple[str, ...]


def lipinski_details(mol: Molecule, data_dir: str | None = None) -> LipinskiResult:
    mw = mol_weight(mol, data_dir)
    logp = crippen_logp(mol, data_dir)
    donors = hb_donors(mol)
    acceptors = hb_acceptors(mol)
    violations = []
    if mw > 500:
        violations.append("MW > 500")
    if logp > 5:
        violations.append("LogP > 5")
    if donors > 5:
        violations.append("HBD > 5")
    if acceptors > 10:
        violations.append("HBA > 10")
    return LipinskiResult(
        passes=not violations,
        mw=mw,
        logp=logp,
        donors=donors,
        acceptors=acceptors,
        violations=tuple(violations),
    )


def lipinski_pass(mol: Molecule, data_dir: str | None = None) -> bool:
    return lipinski_details(mol, data_dir).passes
