"""Kekulization: replace aromatic bonds with an alternating single/double
assignment found by perfect matching over the atoms that still need a double
bond.  Hydrogen counts and all non-aromatic content are left untouched; the
returned molecule has its aromatic flags cleared.
"""

from __future__ import annotations

from dataclasses import replace

from .mol import Atom, Bond, BondOrder, Molecule

# Base valences of the aromatic-capable elements, adjusted by formal charge.
_BASE_VALENCE = {"B": 3, "C": 4, "N": 3, "O": 2, "P": 3, "S": 2}


class KekulizeError(ValueError):
    def __init__(self, message: str, atoms: tuple[int, ...] = ()):
        super().__init__(message)
        self.atoms = atoms


def kekulize(mol: Molecule) -> Molecule:
    aromatic_atoms = [a.index for a in mol.atoms if a.aromatic]
    if not aromatic_atoms:
        return mol

    needs = {i: _needs_double(mol, i) for i in aromatic_atoms}
    adjacency: dict[int, list[int]] = {i: [] for i in aromatic_atoms}
    for bond in mol.bonds:
        if bond.order is BondOrder.AROMATIC and needs.get(bond.a) and needs.get(bond.b):
            adjacency[bond.a].append(bond.b)
            adjacency[bond.b].append(bond.a)

    matched: dict[int, int] = {}
    for system in _aromatic_systems(mol, aromatic_atoms):
        needy = [i for i in system if needs[i]]
        result = _match_component(needy, adjacency)
        if result is None:
            raise KekulizeError(
                f"no Kekule assignment for aromatic system {tuple(sorted(system))}",
                tuple(sorted(system)),
            )
        matched.update(result)

    new_bonds = []
    for bond in mol.bonds:
        if bond.order is BondOrder.AROMATIC:
            order = BondOrder.DOUBLE if matched.get(bond.a) == bond.b else BondOrder.SINGLE
            new_bonds.append(Bond(bond.a, bond.b, order))
        else:
            new_bonds.append(bond)
    new_atoms = [replace(a, aromatic=False) if a.aromatic else a for a in mol.atoms]
    return Molecule(new_atoms, new_bonds, source_text=mol.source_text)


def _needs_double(mol: Molecule, index: int) -> bool:
    atom: Atom = mol.atoms[index]
    base = _BASE_VALENCE[atom.symbol]
    charge = atom.formal_charge
    if atom.symbol in ("C", "B"):
        valence = base - abs(charge)
    else:
        valence = base + charge
    used = mol.degree(index) + atom.total_h
    for bond in mol.bonds_of(index):
        if bond.order is BondOrder.DOUBLE:
            used += 1
        elif bond.order is BondOrder.TRIPLE:
            used += 2
    return valence - used >= 1


def _aromatic_systems(mol: Molecule, aromatic_atoms: list[int]) -> list[list[int]]:
    """Connected components of the aromatic-bond subgraph."""
    remaining = set(aromatic_atoms)
    systems = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v, bond in mol.neighbors(u):
                if bond.order is BondOrder.AROMATIC and v in remaining and v not in comp:
                    comp.add(v)
                    stack.append(v)
        remaining -= comp
        systems.append(sorted(comp))
    return systems


def _match_component(needy: list[int], adjacency: dict[int, list[int]]) -> dict[int, int] | None:
    """Perfect matching over the needy atoms; None when impossible."""
    match: dict[int, int] = {}

    def backtrack() -> bool:
        free = [v for v in needy if v not in match]
        if not free:
            return True
        # Most-constrained-first keeps the search near-linear on ring systems.
        v = min(free, key=lambda x: (sum(1 for u in adjacency[x] if u not in match), x))
        partners = [u for u in adjacency[v] if u not in match]
        if not partners:
            return False
        for u in sorted(partners):
            match[v] = u
            match[u] = v
            if backtrack():
                return True
            del match[v]
            del match[u]
        return False

    return match if backtrack() else None
