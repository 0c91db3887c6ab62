"""Molecular kernel: SMILES parsing/writing, ring perception, kekulization,
and SMARTS substructure matching."""

from .kekulize import KekulizeError, kekulize
from .match import MatchSet, anchored_match, atom_matches, bond_matches, has_match, match
from .mol import Atom, Bond, BondOrder, Molecule, RingInfo
from .rings import perceive_rings
from .smarts import Pattern, SmartsError, parse_smarts
from .smiles import SmilesError, parse_smiles, write_smiles

__all__ = [
    "Atom",
    "Bond",
    "BondOrder",
    "KekulizeError",
    "MatchSet",
    "Molecule",
    "Pattern",
    "RingInfo",
    "SmartsError",
    "SmilesError",
    "anchored_match",
    "atom_matches",
    "bond_matches",
    "has_match",
    "kekulize",
    "match",
    "parse_smarts",
    "parse_smiles",
    "perceive_rings",
    "write_smiles",
]
