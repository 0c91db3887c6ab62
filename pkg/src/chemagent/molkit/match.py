"""Substructure matching: backtracking enumeration of all injective
pattern-to-molecule mappings with candidate pruning via anchored neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mol import Bond, BondOrder, Molecule
from .smarts import And, Expr, Not, Or, Pattern, Prim


@dataclass(frozen=True)
class MatchSet:
    """All injective mappings; ``mappings[k][i]`` is the molecule atom that
    pattern node ``i`` maps to in the k-th match."""

    mappings: tuple[tuple[int, ...], ...]

    @property
    def unique_atom_sets(self) -> int:
        return len({frozenset(m) for m in self.mappings})

    def __bool__(self) -> bool:
        return bool(self.mappings)

    def __len__(self) -> int:
        return len(self.mappings)


def atom_matches(expr: Expr, mol: Molecule, index: int) -> bool:
    if isinstance(expr, Prim):
        return _atom_prim(expr, mol, index)
    if isinstance(expr, Not):
        return not atom_matches(expr.expr, mol, index)
    if isinstance(expr, And):
        return all(atom_matches(p, mol, index) for p in expr.parts)
    if isinstance(expr, Or):
        return any(atom_matches(p, mol, index) for p in expr.parts)
    raise TypeError(f"not an atom expression: {expr!r}")


def _atom_prim(prim: Prim, mol: Molecule, index: int) -> bool:
    atom = mol.atoms[index]
    code = prim.code
    if code == "elem":
        return atom.symbol == prim.value
    if code == "anum":
        return atom.element.atomic_number == prim.value
    if code == "wild":
        return True
    if code == "aromatic":
        return atom.aromatic
    if code == "aliphatic":
        return not atom.aromatic
    if code == "degree":
        return mol.degree(index) == prim.value
    if code == "hcount":
        return atom.total_h == prim.value
    if code == "connectivity":
        return mol.connectivity(index) == prim.value
    if code == "charge":
        return atom.formal_charge == prim.value
    if code == "ring_membership":
        count = mol.rings.atom_ring_membership[index]
        return count >= 1 if prim.value is None else count == prim.value
    if code == "ring_size":
        smallest = mol.rings.atom_smallest_ring[index]
        return smallest is not None if prim.value is None else smallest == prim.value
    raise ValueError(f"unknown atom primitive {code!r}")


def bond_matches(expr: Expr, mol: Molecule, bond: Bond) -> bool:
    if isinstance(expr, Prim):
        return _bond_prim(expr, mol, bond)
    if isinstance(expr, Not):
        return not bond_matches(expr.expr, mol, bond)
    if isinstance(expr, And):
        return all(bond_matches(p, mol, bond) for p in expr.parts)
    if isinstance(expr, Or):
        return any(bond_matches(p, mol, bond) for p in expr.parts)
    raise TypeError(f"not a bond expression: {expr!r}")


def _bond_prim(prim: Prim, mol: Molecule, bond: Bond) -> bool:
    symbol = prim.value
    if symbol == "-":
        return bond.order is BondOrder.SINGLE
    if symbol == "=":
        return bond.order is BondOrder.DOUBLE
    if symbol == "#":
        return bond.order is BondOrder.TRIPLE
    if symbol == ":":
        return bond.order is BondOrder.AROMATIC
    if symbol == "~":
        return True
    if symbol == "@":
        return mol.rings.is_ring_bond(bond.a, bond.b)
    raise ValueError(f"unknown bond primitive {symbol!r}")


def match(pattern: Pattern, mol: Molecule) -> MatchSet:
    """Enumerate every injective mapping of ``pattern`` into ``mol``."""
    n = len(pattern.nodes)
    order = _search_order(pattern)
    # For each node (in search order): edges back to already-placed nodes.
    placed_at = {node: k for k, node in enumerate(order)}
    back_edges: list[list[tuple[int, Expr]]] = [[] for _ in range(n)]
    for edge in pattern.edges:
        i, j = edge.i, edge.j
        later, earlier = (i, j) if placed_at[i] > placed_at[j] else (j, i)
        back_edges[placed_at[later]].append((earlier, edge.expr))

    assignment: dict[int, int] = {}
    used: set[int] = set()
    results: list[tuple[int, ...]] = []

    def feasible(node: int, atom: int, pos: int) -> bool:
        if atom in used:
            return False
        if not atom_matches(pattern.nodes[node], mol, atom):
            return False
        for earlier_node, expr in back_edges[pos]:
            bond = mol.bond_between(assignment[earlier_node], atom)
            if bond is None or not bond_matches(expr, mol, bond):
                return False
        return True

    def backtrack(pos: int) -> None:
        if pos == len(order):
            results.append(tuple(assignment[i] for i in range(n)))
            return
        node = order[pos]
        if back_edges[pos]:
            anchor_node = back_edges[pos][0][0]
            candidates = [v for v, _ in mol.neighbors(assignment[anchor_node])]
        else:
            candidates = range(len(mol.atoms))
        for atom in candidates:
            if feasible(node, atom, pos):
                assignment[node] = atom
                used.add(atom)
                backtrack(pos + 1)
                used.remove(atom)
                del assignment[node]

    backtrack(0)
    results.sort()
    return MatchSet(tuple(results))


def _search_order(pattern: Pattern) -> list[int]:
    """BFS order from node 0; the pattern graph is connected by construction,
    so every node after the first has an already-placed neighbor."""
    order = [0]
    seen = {0}
    k = 0
    while k < len(order):
        u = order[k]
        for v, _ in pattern.adjacency[u]:
            if v not in seen:
                seen.add(v)
                order.append(v)
        k += 1
    return order


def has_match(pattern: Pattern, mol: Molecule) -> bool:
    """Cheaper any-match test (stops at the first hit)."""
    return _first_match(pattern, mol) is not None


def anchored_match(pattern: Pattern, mol: Molecule, atom: int) -> bool:
    """True when some embedding maps pattern node 0 onto ``atom``."""
    return _first_match(pattern, mol, anchor=atom) is not None


def _first_match(pattern: Pattern, mol: Molecule, anchor: int | None = None):
    n = len(pattern.nodes)
    order = _search_order(pattern)
    placed_at = {node: k for k, node in enumerate(order)}
    back_edges: list[list[tuple[int, Expr]]] = [[] for _ in range(n)]
    for edge in pattern.edges:
        i, j = edge.i, edge.j
        later, earlier = (i, j) if placed_at[i] > placed_at[j] else (j, i)
        back_edges[placed_at[later]].append((earlier, edge.expr))

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(pos: int):
        if pos == len(order):
            return tuple(assignment[i] for i in range(n))
        node = order[pos]
        if pos == 0 and anchor is not None:
            candidates = [anchor]
        elif back_edges[pos]:
            anchor_node = back_edges[pos][0][0]
            candidates = [v for v, _ in mol.neighbors(assignment[anchor_node])]
        else:
            candidates = range(len(mol.atoms))
        for atom in candidates:
            if atom in used or not atom_matches(pattern.nodes[node], mol, atom):
                continue
            ok = True
            for earlier_node, expr in back_edges[pos]:
                bond = mol.bond_between(assignment[earlier_node], atom)
                if bond is None or not bond_matches(expr, mol, bond):
                    ok = False
                    break
            if not ok:
                continue
            assignment[node] = atom
            used.add(atom)
            found = backtrack(pos + 1)
            if found is not None:
                return found
            used.remove(atom)
            del assignment[node]
        return None

    return backtrack(0)
