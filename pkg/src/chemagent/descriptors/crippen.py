"""Wildman-Crippen LogP: per-atom contributions by first-matching typing
rule, plus per-hydrogen contributions keyed by the heavy-atom context.
This value also serves as the WLOGP axis of the BOILED-Egg model."""

from __future__ import annotations

from ..molkit import BondOrder, Molecule
from ..molkit.match import anchored_match
from .tables import CrippenTable, crippen_table


class UntypedAtomError(ValueError):
    """An atom matched no typing rule and the table declares no default."""


def _type_atoms(mol: Molecule, table: CrippenTable) -> list[tuple[str, float]]:
    present = {a.symbol for a in mol.atoms}
    typed: dict[int, tuple[str, float]] = {}
    for rule in table.atom_rules:
        if len(typed) == len(mol.atoms):
            break
        if rule.elements is not None and not (rule.elements & present):
            continue
        for idx in range(len(mol.atoms)):
            if idx in typed:
                continue
            if anchored_match(rule.pattern, mol, idx):
                typed[idx] = (rule.label, rule.value)
    missing = [i for i in range(len(mol.atoms)) if i not in typed]
    if missing:
        raise UntypedAtomError(
            f"no LogP rule or default covers atoms {missing} of {mol.source_text!r}"
        )
    return [typed[i] for i in range(len(mol.atoms))]


def _hydrogen_key(mol: Molecule, index: int) -> str:
    """Context key for hydrogens attached to the heavy atom ``index``."""
    heavy = mol.atoms[index]
    if heavy.symbol == "C":
        return "carbon"
    if heavy.symbol == "N":
        return "nitrogen"
    if heavy.symbol == "O":
        neighbors = [(mol.atoms[j], bond) for j, bond in mol.neighbors(index)]
        if not neighbors:
            return "default"  # bare water-like oxygen
        other, _ = neighbors[0]
        if other.symbol == "N":
            return "nitrogen"   # H-O-N hydrogens score like amine hydrogens
        if other.symbol in ("O", "S"):
            return "acidic"
        if other.symbol == "C":
            if other.aromatic:
                return "hydroxyl"
            double_partner = {
                mol.atoms[b.other(other.index)].symbol
                for b in mol.bonds_of(other.index)
                if b.order in (BondOrder.DOUBLE, BondOrder.TRIPLE)
            }
            if double_partner & {"C", "N", "O", "S"}:
                return "acidic"  # enol / acid / amide-ol hydrogens
            if all(b.order is BondOrder.SINGLE for b in mol.bonds_of(other.index)):
                return "hydroxyl"
            return "default"
        return "hydroxyl"  # O bound to an exotic heavy atom
    if heavy.symbol in ("S", "P", "B", "Si"):
        return "hydroxyl"
    return "default"


def crippen_contributions(
    mol: Molecule, data_dir: str | None = None
) -> list[tuple[str, float, float]]:
    """Per-atom (type label, atom contribution, attached-hydrogen total)."""
    table = crippen_table(data_dir)
    out = []
    for idx, (label, value) in enumerate(_type_atoms(mol, table)):
        h_count = mol.atoms[idx].total_h
        h_total = 0.0
        if h_count:
            key = _hydrogen_key(mol, idx)
            h_total = h_count * table.hydrogen.get(key, table.hydrogen["default"])
        out.append((label, value, h_total))
    return out


def crippen_logp(mol: Molecule, data_dir: str | None = None) -> float:
    return sum(v + h for _, v, h in crippen_contributions(mol, data_dir))
