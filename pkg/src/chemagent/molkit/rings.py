"""Ring perception: a deterministic smallest-set-of-smallest-rings.

Candidate cycles come from per-root BFS trees (shortest cycle through each
edge pair), sorted by (size, atom tuple); independent ones are selected
greedily over GF(2) edge vectors until the cyclomatic number is reached.
The sort makes the result independent of dict ordering or input spelling.
"""

from __future__ import annotations

from collections import deque

from .mol import Molecule, RingInfo


def perceive_rings(mol: Molecule) -> RingInfo:
    n = len(mol.atoms)
    components = mol.components()
    target = len(mol.bonds) - n + len(components)
    if target <= 0:
        return RingInfo(
            rings=(),
            atom_ring_membership=tuple([0] * n),
            atom_smallest_ring=tuple([None] * n),
            ring_bonds=frozenset(),
        )

    edge_index = {bond.key: k for k, bond in enumerate(mol.bonds)}
    candidates = _candidate_cycles(mol)
    candidates.sort(key=lambda cycle: (len(cycle), cycle))

    pivots: dict[int, int] = {}
    rings: list[tuple[int, ...]] = []
    for cycle in candidates:
        vec = 0
        for a, b in _cycle_edges(cycle):
            vec |= 1 << edge_index[(a, b) if a < b else (b, a)]
        reduced = vec
        while reduced:
            lead = reduced.bit_length() - 1
            if lead in pivots:
                reduced ^= pivots[lead]
            else:
                break
        if reduced:
            pivots[reduced.bit_length() - 1] = reduced
            rings.append(cycle)
            if len(rings) == target:
                break

    membership = [0] * n
    smallest: list[int | None] = [None] * n
    ring_bonds: set[tuple[int, int]] = set()
    for cycle in rings:
        for atom in cycle:
            membership[atom] += 1
            if smallest[atom] is None or len(cycle) < smallest[atom]:
                smallest[atom] = len(cycle)
        for a, b in _cycle_edges(cycle):
            ring_bonds.add((a, b) if a < b else (b, a))

    return RingInfo(
        rings=tuple(rings),
        atom_ring_membership=tuple(membership),
        atom_smallest_ring=tuple(smallest),
        ring_bonds=frozenset(ring_bonds),
    )


def _cycle_edges(cycle: tuple[int, ...]):
    for k in range(len(cycle)):
        yield cycle[k], cycle[(k + 1) % len(cycle)]


def _candidate_cycles(mol: Molecule) -> list[tuple[int, ...]]:
    n = len(mol.atoms)
    seen: set[frozenset[tuple[int, int]]] = set()
    cycles: list[tuple[int, ...]] = []
    for root in range(n):
        dist, parent = _bfs(mol, root)
        for bond in mol.bonds:
            x, y = bond.a, bond.b
            if dist.get(x) is None or dist.get(y) is None:
                continue
            path_x = _path_to_root(parent, x)
            path_y = _path_to_root(parent, y)
            # Paths must meet only at the root for a simple cycle.
            if set(path_x) & set(path_y) != {root}:
                continue
            if bond.key in {tuple(sorted(p)) for p in zip(path_x, path_x[1:])}:
                continue
            cycle_atoms = path_x[::-1] + path_y[:-1]
            if len(cycle_atoms) < 3 or len(set(cycle_atoms)) != len(cycle_atoms):
                continue
            edges = frozenset(
                (a, b) if a < b else (b, a) for a, b in _cycle_edges(tuple(cycle_atoms))
            )
            if edges in seen:
                continue
            seen.add(edges)
            cycles.append(_canonical_cycle(cycle_atoms))
    return cycles


def _bfs(mol: Molecule, root: int):
    dist = {root: 0}
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v, _ in sorted(mol.neighbors(u), key=lambda nb: nb[0]):
            if v not in dist:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def _path_to_root(parent: dict[int, int | None], node: int) -> list[int]:
    path = [node]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def _canonical_cycle(atoms: list[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest atom leads toward its smaller neighbor."""
    k = atoms.index(min(atoms))
    rotated = atoms[k:] + atoms[:k]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)
