"""Molecular graph types shared by the parser, matcher, and descriptors.

All types are immutable after construction; ring perception is computed
lazily and cached on first access (idempotent, so safe under concurrent use).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from ..periodic import Element


class BondOrder(enum.Enum):
    SINGLE = 1
    DOUBLE = 2
    TRIPLE = 3
    AROMATIC = 4

    @property
    def valence(self) -> float:
        """Contribution to an atom's bond-order sum (aromatic counts 1.5)."""
        return {BondOrder.SINGLE: 1.0, BondOrder.DOUBLE: 2.0,
                BondOrder.TRIPLE: 3.0, BondOrder.AROMATIC: 1.5}[self]


@dataclass(frozen=True)
class Atom:
    element: Element
    index: int
    formal_charge: int = 0
    isotope: Optional[int] = None
    aromatic: bool = False
    explicit_h: Optional[int] = None
    implicit_h: int = 0

    @property
    def symbol(self) -> str:
        return self.element.symbol

    @property
    def total_h(self) -> int:
        # The parser sets implicit_h = explicit_h whenever the latter is given,
        # so implicit_h is always the full hydrogen count.
        return self.implicit_h


@dataclass(frozen=True)
class Bond:
    a: int
    b: int
    order: BondOrder

    def other(self, atom_index: int) -> int:
        return self.b if atom_index == self.a else self.a

    @property
    def key(self) -> tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


@dataclass(frozen=True)
class RingInfo:
    """Smallest set of smallest rings plus per-atom membership bookkeeping."""

    rings: tuple[tuple[int, ...], ...]
    atom_ring_membership: tuple[int, ...]
    atom_smallest_ring: tuple[Optional[int], ...]
    ring_bonds: frozenset[tuple[int, int]]

    def is_ring_atom(self, index: int) -> bool:
        return self.atom_ring_membership[index] > 0

    def is_ring_bond(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.ring_bonds


class Molecule:
    """A simple graph of atoms and bonds parsed from one SMILES string."""

    __slots__ = ("atoms", "bonds", "source_text", "_adjacency", "_bond_lookup", "_rings")

    def __init__(self, atoms: Sequence[Atom], bonds: Sequence[Bond], source_text: str = ""):
        self.atoms: tuple[Atom, ...] = tuple(atoms)
        self.bonds: tuple[Bond, ...] = tuple(bonds)
        self.source_text = source_text
        adjacency: list[list[Bond]] = [[] for _ in self.atoms]
        lookup: dict[tuple[int, int], Bond] = {}
        n = len(self.atoms)
        for bond in self.bonds:
            if not (0 <= bond.a < n and 0 <= bond.b < n):
                raise ValueError(f"bond endpoint out of range: {bond}")
            if bond.a == bond.b:
                raise ValueError(f"self-bond on atom {bond.a}")
            if bond.key in lookup:
                raise ValueError(f"duplicate bond between atoms {bond.key}")
            if bond.order is BondOrder.AROMATIC:
                if not (self.atoms[bond.a].aromatic and self.atoms[bond.b].aromatic):
                    raise ValueError(f"aromatic bond {bond.key} joins a non-aromatic atom")
            lookup[bond.key] = bond
            adjacency[bond.a].append(bond)
            adjacency[bond.b].append(bond)
        self._adjacency = tuple(tuple(lst) for lst in adjacency)
        self._bond_lookup = lookup
        self._rings: Optional[RingInfo] = None

    def __len__(self) -> int:
        return len(self.atoms)

    def neighbors(self, index: int) -> Iterator[tuple[int, Bond]]:
        for bond in self._adjacency[index]:
            yield bond.other(index), bond

    def bonds_of(self, index: int) -> tuple[Bond, ...]:
        return self._adjacency[index]

    def bond_between(self, a: int, b: int) -> Optional[Bond]:
        return self._bond_lookup.get((a, b) if a < b else (b, a))

    def degree(self, index: int) -> int:
        """Heavy-atom degree (implicit hydrogens are not graph nodes)."""
        return len(self._adjacency[index])

    def connectivity(self, index: int) -> int:
        """Total connections: heavy degree plus attached hydrogens."""
        return self.degree(index) + self.atoms[index].total_h

    def bond_order_sum(self, index: int) -> float:
        return sum(b.order.valence for b in self._adjacency[index])

    def components(self) -> list[list[int]]:
        seen = [False] * len(self.atoms)
        out = []
        for start in range(len(self.atoms)):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j, _ in self.neighbors(i):
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            out.append(sorted(comp))
        return out

    @property
    def rings(self) -> RingInfo:
        if self._rings is None:
            from .rings import perceive_rings
            self._rings = perceive_rings(self)
        return self._rings

    def total_hydrogens(self) -> int:
        return sum(a.total_h for a in self.atoms)

    def __repr__(self) -> str:
        return f"Molecule({self.source_text!r}, atoms={len(self.atoms)}, bonds={len(self.bonds)})"
