"""Counting descriptors: molecular weight, Lipinski hydrogen-bond counts,
rotatable bonds, and aromatic ring count."""

from __future__ import annotations

from ..molkit import BondOrder, Molecule
from ..periodic import periodic_table


def mol_weight(mol: Molecule, data_dir: str | None = None) -> float:
    """Sum of heavy-atom weights (isotope mass when specified) plus hydrogens."""
    table = periodic_table(data_dir)
    h_weight = table.get("H").standard_weight
    total = 0.0
    for atom in mol.atoms:
        if atom.isotope is not None:
            total += table.isotope_mass(atom.symbol, atom.isotope)
        else:
            total += atom.element.standard_weight
        total += h_weight * atom.total_h
    return total


def hb_donors(mol: Molecule) -> int:
    """Lipinski donors: N or O atoms carrying at least one hydrogen."""
    return sum(1 for a in mol.atoms if a.symbol in ("N", "O") and a.total_h >= 1)


def hb_acceptors(mol: Molecule) -> int:
    """Lipinski acceptors: every N or O atom."""
    return sum(1 for a in mol.atoms if a.symbol in ("N", "O"))


def _is_amide_bond(mol: Molecule, a: int, b: int) -> bool:
    for c, n in ((a, b), (b, a)):
        if mol.atoms[c].symbol == "C" and mol.atoms[n].symbol == "N":
            for bond in mol.bonds_of(c):
                if bond.order is BondOrder.DOUBLE and mol.atoms[bond.other(c)].symbol == "O":
                    return True
    return False


def rotatable_bonds(mol: Molecule) -> int:
    """Non-ring single bonds between two non-terminal heavy atoms, with
    amide C-N bonds excluded."""
    rings = mol.rings
    count = 0
    for bond in mol.bonds:
        if bond.order is not BondOrder.SINGLE:
            continue
        if rings.is_ring_bond(bond.a, bond.b):
            continue
        if mol.degree(bond.a) < 2 or mol.degree(bond.b) < 2:
            continue
        if _is_amide_bond(mol, bond.a, bond.b):
            continue
        count += 1
    return count


def aromatic_ring_count(mol: Molecule) -> int:
    """Rings (SSSR) whose atoms are all aromatic."""
    return sum(
        1 for ring in mol.rings.rings if all(mol.atoms[i].aromatic for i in ring)
    )
