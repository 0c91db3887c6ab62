"""Quantitative estimate of drug-likeness: desirability-transformed
properties combined by a weighted geometric mean."""

from __future__ import annotations

import math

from ..molkit import Molecule
from .alerts import alert_count, get_alert_set
from .basic import aromatic_ring_count, hb_acceptors, hb_donors, mol_weight, rotatable_bonds
from .crippen import crippen_logp
from .tables import QED_PROPERTIES, qed_params
from .tpsa import tpsa


def qed_properties(mol: Molecule, data_dir: str | None = None) -> dict[str, float]:
    return {
        "MW": mol_weight(mol, data_dir),
        "ALOGP": crippen_logp(mol, data_dir),
        "HBA": float(hb_acceptors(mol)),
        "HBD": float(hb_donors(mol)),
        "PSA": tpsa(mol, data_dir=data_dir),
        "ROTB": float(rotatable_bonds(mol)),
        "AROM": float(aromatic_ring_count(mol)),
        "ALERTS": float(alert_count(mol, get_alert_set("qed-alerts", data_dir))),
    }


def qed_from_properties(properties: dict[str, float], data_dir: str | None = None) -> float:
    params = qed_params(data_dir)
    total_weight = sum(params[p].weight for p in QED_PROPERTIES)
    log_sum = 0.0
    for prop in QED_PROPERTIES:
        d = params[prop].desirability(properties[prop])
        log_sum += params[prop].weight * math.log(max(d, 1e-12))
    return math.exp(log_sum / total_weight)


def qed(mol: Molecule, data_dir: str | None = None) -> float:
    return qed_from_properties(qed_properties(mol, data_dir), data_dir)
