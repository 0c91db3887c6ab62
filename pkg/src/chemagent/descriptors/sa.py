"""Synthetic-accessibility score in [1, 10] (lower = easier to make).

Fragment familiarity comes from a table of circular-environment scores
(radius <= 2); with the shipped empty table the fragment term is 0 and the
score is complexity-only, which the detail record flags.  Complexity
penalties cover molecule size, macrocycles, and spiro/bridgehead ring
topology, with a symmetry bonus for repeated environments.  Stereo centers
are discarded at parse time, so no stereo penalty applies.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass

from ..molkit import Molecule
from .tables import SaParams, sa_params


def environment_keys(mol: Molecule, radius: int = 2) -> list[list[str]]:
    """Per-atom canonical keys of circular environments, radii 0..radius.

    Keys depend only on the graph (not on input atom order), so identical
    molecules spelled differently produce identical key multisets.
    """
    def digest(payload: str) -> str:
        return format(zlib.crc32(payload.encode("utf-8")), "08x")

    current = []
    for i, a in enumerate(mol.atoms):
        current.append(
            digest(f"{a.symbol}|{a.formal_charge}|{a.total_h}|{mol.degree(i)}|{int(a.aromatic)}|"
                   f"{int(mol.rings.is_ring_atom(i))}")
        )
    layers = [current]
    for _ in range(radius):
        nxt = []
        for i in range(len(mol.atoms)):
            env = sorted(
                f"{bond.order.name}:{layers[-1][j]}" for j, bond in mol.neighbors(i)
            )
            nxt.append(digest(layers[-1][i] + "||" + ",".join(env)))
        layers.append(nxt)
    return layers


def spiro_and_bridgehead_atoms(mol: Molecule) -> tuple[set[int], set[int]]:
    rings = [set(r) for r in mol.rings.rings]
    ring_bond_degree = {
        i: sum(1 for j, b in mol.neighbors(i) if mol.rings.is_ring_bond(i, j))
        for i in range(len(mol.atoms))
    }
    spiro: set[int] = set()
    bridge: set[int] = set()
    for a in range(len(rings)):
        for b in range(a + 1, len(rings)):
            shared = rings[a] & rings[b]
            if len(shared) == 1:
                spiro |= shared
            elif len(shared) >= 3:
                # rings sharing two or more bonds: the bridgeheads are the
                # shared atoms that branch into three or more ring bonds
                bridge |= {i for i in shared if ring_bond_degree[i] >= 3}
    return spiro, bridge - spiro


@dataclass(frozen=True)
class SaResult:
    score: float
    fragment_term: float
    complexity_penalty: float
    symmetry_bonus: float
    fragment_table_empty: bool


def sa_details(mol: Molecule, data_dir: str | None = None) -> SaResult:
    params: SaParams = sa_params(data_dir)
    n_atoms = len(mol.atoms)

    layers = environment_keys(mol, radius=2)
    if params.fragment_scores:
        scores = [
            params.fragment_scores.get(key, params.missing_fragment_score)
            for key in layers[-1]
        ]
        fragment = sum(scores) / len(scores)
    else:
        fragment = 0.0

    size_penalty = n_atoms ** params.size_exponent - n_atoms
    spiro, bridge = spiro_and_bridgehead_atoms(mol)
    ring_penalty = math.log10(len(spiro) + 1) + math.log10(len(bridge) + 1)
    macro_penalty = params.macrocycle_penalty if any(
        len(r) > 8 for r in mol.rings.rings
    ) else 0.0
    complexity = size_penalty + ring_penalty + macro_penalty

    distinct = len(set(key for layer in layers for key in layer))
    symmetry = 0.0
    if n_atoms > distinct:
        symmetry = math.log(n_atoms / distinct) * params.symmetry_weight

    raw = fragment - complexity + symmetry
    span = params.raw_max - params.raw_min
    score = 11.0 - (raw - params.raw_min + 1.0) / span * 9.0
    if score > params.smooth_threshold:
        score = params.smooth_threshold + math.log(score + 1.0 - (params.smooth_threshold + 1.0))
    score = min(max(score, 1.0), 10.0)
    return SaResult(
        score=score,
        fragment_term=fragment,
        complexity_penalty=complexity,
        symmetry_bonus=symmetry,
        fragment_table_empty=not params.fragment_scores,
    )


def sa_score(mol: Molecule, data_dir: str | None = None) -> float:
    return sa_details(mol, data_dir).score
