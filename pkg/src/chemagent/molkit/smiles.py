"""SMILES reading and writing.

The accepted grammar is the OpenSMILES organic/bracket core: organic-subset
atoms, bracket atoms with isotope / charge / H-count / atom class, branches,
ring closures (including %nn), bond symbols ``- = # :`` and ``.`` between
components.  Stereo markers (``/``, ``\\``, ``@``) are parsed and discarded.
Aromaticity is taken from the input (lowercase atoms, ``:`` bonds) and never
re-perceived.

Implicit hydrogen counts follow the SMILES valence model: the lowest default
valence that covers the bond-order sum determines the hydrogen count, and a
bare atom whose bond-order sum exceeds its element's highest default valence
is a hard parse error.  Aromatic bonds count 1.5 toward the sum; aromatic
atoms fill up to their lowest default valence only, and their overflow check
uses the plain connection count so fused aromatics stay legal.
"""

from __future__ import annotations

import re

from ..periodic import AROMATIC_ELEMENTS, ORGANIC_SUBSET, PeriodicTable, periodic_table
from .mol import Atom, Bond, BondOrder, Molecule


class SmilesError(ValueError):
    """Positioned parse error; every malformed input raises this type."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.message = message
        self.text = text
        self.position = position


_BOND_CHARS = {
    "-": BondOrder.SINGLE,
    "=": BondOrder.DOUBLE,
    "#": BondOrder.TRIPLE,
    ":": BondOrder.AROMATIC,
    "/": BondOrder.SINGLE,   # stereo slash: bond kept, direction discarded
    "\\": BondOrder.SINGLE,
}

_BRACKET_RE = re.compile(
    r"""\[
        (?P<isotope>\d{1,3})?
        (?P<symbol>[A-Z][a-z]?|[bcnops])
        (?P<stereo>@{1,2})?
        (?P<hcount>H\d*)?
        (?P<charge>\+\+|--|[+-]\d{1,2}|[+-])?
        (?P<cls>:\d+)?
        \]""",
    re.VERBOSE,
)

# Longest-match order: two-letter organic symbols first.
_ORGANIC_TOKENS = ("Cl", "Br", "B", "C", "N", "O", "P", "S", "F", "I")
_AROMATIC_TOKENS = ("b", "c", "n", "o", "p", "s")
_ASCII_DIGITS = frozenset("0123456789")


class _RawAtom:
    __slots__ = ("symbol", "aromatic", "isotope", "charge", "explicit_h", "bracket", "position")

    def __init__(self, symbol, aromatic, isotope, charge, explicit_h, bracket, position):
        self.symbol = symbol
        self.aromatic = aromatic
        self.isotope = isotope
        self.charge = charge
        self.explicit_h = explicit_h
        self.bracket = bracket
        self.position = position


def parse_smiles(text: str, table: PeriodicTable | None = None) -> Molecule:
    """Parse a SMILES string into a molecular graph.

    Raises SmilesError with the offending position on malformed input.
    """
    if not isinstance(text, str):
        raise SmilesError("input is not a string", repr(text), 0)
    if not text:
        raise SmilesError("empty SMILES", text, 0)
    table = table or periodic_table()

    atoms: list[_RawAtom] = []
    bonds: dict[tuple[int, int], tuple[BondOrder | None, int]] = {}
    stack: list[int] = []
    ring_open: dict[int, tuple[int, BondOrder | None, int]] = {}
    prev: int | None = None
    pending: BondOrder | None = None
    pending_pos = 0
    i = 0

    def add_bond(a: int, b: int, order: BondOrder | None, pos: int) -> None:
        if a == b:
            raise SmilesError("ring closure bonds an atom to itself", text, pos)
        key = (a, b) if a < b else (b, a)
        if key in bonds:
            raise SmilesError("duplicate bond between atoms", text, pos)
        bonds[key] = (order, pos)

    def attach(atom_index: int, pos: int) -> None:
        nonlocal prev, pending
        if prev is not None:
            add_bond(prev, atom_index, pending, pos)
        elif pending is not None:
            raise SmilesError("bond symbol with no preceding atom", text, pending_pos)
        pending = None
        prev = atom_index

    while i < len(text):
        ch = text[i]
        if ch == "[":
            m = _BRACKET_RE.match(text, i)
            if m is None:
                end = text.find("]", i)
                if end == -1:
                    raise SmilesError("unterminated bracket atom", text, i)
                raise SmilesError("malformed bracket atom", text, i)
            symbol = m.group("symbol")
            aromatic = symbol.islower()
            if aromatic:
                symbol = symbol.upper()
                if symbol not in AROMATIC_ELEMENTS:
                    raise SmilesError(f"element {symbol!r} cannot be aromatic", text, i)
            if symbol == "H":
                raise SmilesError(
                    "explicit hydrogen atoms are not supported; use bracket H counts", text, i
                )
            if symbol not in table:
                raise SmilesError(f"unknown atom symbol {m.group('symbol')!r}", text, i)
            isotope = int(m.group("isotope")) if m.group("isotope") else None
            if isotope == 0:
                isotope = None  # OpenSMILES: zero means unspecified
            hgroup = m.group("hcount")
            explicit_h = 0 if hgroup is None else (1 if hgroup == "H" else int(hgroup[1:]))
            cgroup = m.group("charge")
            if cgroup is None:
                charge = 0
            elif cgroup == "++":
                charge = 2
            elif cgroup == "--":
                charge = -2
            elif len(cgroup) == 1:
                charge = 1 if cgroup == "+" else -1
            else:
                charge = int(cgroup)
            atoms.append(_RawAtom(symbol, aromatic, isotope, charge, explicit_h, True, i))
            attach(len(atoms) - 1, i)
            i = m.end()
        elif ch.isalpha() or ch == "*":
            token = None
            for cand in _ORGANIC_TOKENS:
                if text.startswith(cand, i):
                    token = cand
                    aromatic = False
                    break
            else:
                if ch in _AROMATIC_TOKENS:
                    token = ch.upper()
                    aromatic = True
            if token is None:
                raise SmilesError(f"unknown atom symbol {ch!r}", text, i)
            atoms.append(_RawAtom(token, aromatic, None, 0, None, False, i))
            attach(len(atoms) - 1, i)
            i += len(token) if not aromatic else 1
        elif ch in _BOND_CHARS:
            if pending is not None:
                raise SmilesError("two consecutive bond symbols", text, i)
            pending = _BOND_CHARS[ch]
            pending_pos = i
            i += 1
        elif ch in _ASCII_DIGITS or ch == "%":
            if prev is None:
                raise SmilesError("ring closure before any atom", text, i)
            if ch == "%":
                if i + 2 >= len(text) or not all(c in _ASCII_DIGITS for c in text[i + 1 : i + 3]):
                    raise SmilesError("%% ring closure needs two digits", text, i)
                num = int(text[i + 1 : i + 3])
                width = 3
            else:
                num = int(ch)
                width = 1
            if num in ring_open:
                other, other_bond, other_pos = ring_open.pop(num)
                order = pending if pending is not None else other_bond
                if pending is not None and other_bond is not None and pending is not other_bond:
                    raise SmilesError("conflicting ring-closure bond symbols", text, i)
                add_bond(other, prev, order, i)
                pending = None
            else:
                ring_open[num] = (prev, pending, i)
                pending = None
            i += width
        elif ch == "(":
            if prev is None:
                raise SmilesError("branch with no preceding atom", text, i)
            if pending is not None:
                raise SmilesError("bond symbol before branch opening", text, pending_pos)
            stack.append(prev)
            i += 1
        elif ch == ")":
            if not stack:
                raise SmilesError("unbalanced parenthesis", text, i)
            if pending is not None:
                raise SmilesError("dangling bond symbol before ')'", text, pending_pos)
            prev = stack.pop()
            i += 1
        elif ch == ".":
            if stack:
                raise SmilesError("component separator inside a branch", text, i)
            if pending is not None:
                raise SmilesError("bond symbol before component separator", text, pending_pos)
            if prev is None:
                raise SmilesError("component separator without a preceding atom", text, i)
            prev = None
            i += 1
        elif ch.isspace():
            raise SmilesError("whitespace inside SMILES", text, i)
        else:
            raise SmilesError(f"unexpected character {ch!r}", text, i)

    if stack:
        raise SmilesError("unbalanced parenthesis", text, len(text))
    if pending is not None:
        raise SmilesError("dangling bond symbol", text, pending_pos)
    if ring_open:
        num, (_, _, pos) = next(iter(ring_open.items()))
        raise SmilesError(f"unmatched ring-closure digit {num}", text, pos)
    if not atoms:
        raise SmilesError("no atoms in SMILES", text, 0)

    return _build(text, atoms, bonds, table)


def _build(text, raw_atoms, raw_bonds, table) -> Molecule:
    # Resolve default bond orders: aromatic when both atoms are aromatic.
    bond_list = []
    for (a, b), (order, pos) in raw_bonds.items():
        if order is None:
            order = BondOrder.AROMATIC if raw_atoms[a].aromatic and raw_atoms[b].aromatic else BondOrder.SINGLE
        if order is BondOrder.AROMATIC and not (raw_atoms[a].aromatic and raw_atoms[b].aromatic):
            raise SmilesError("aromatic bond between non-aromatic atoms", text, pos)
        bond_list.append(Bond(a, b, order))

    per_atom_orders: list[list[BondOrder]] = [[] for _ in raw_atoms]
    for bond in bond_list:
        per_atom_orders[bond.a].append(bond.order)
        per_atom_orders[bond.b].append(bond.order)

    final_atoms = []
    for idx, raw in enumerate(raw_atoms):
        element = table.get(raw.symbol)
        implicit = _implicit_hydrogens(raw, element, per_atom_orders[idx], text)
        final_atoms.append(
            Atom(
                element=element,
                index=idx,
                formal_charge=raw.charge,
                isotope=raw.isotope,
                aromatic=raw.aromatic,
                explicit_h=raw.explicit_h if raw.bracket else None,
                implicit_h=implicit,
            )
        )
    return Molecule(final_atoms, bond_list, source_text=text)


def _implicit_hydrogens(raw: _RawAtom, element, orders: list[BondOrder], text: str) -> int:
    if raw.bracket:
        return raw.explicit_h or 0
    valences = element.default_valences
    if raw.aromatic:
        # Twice the bond-order sum keeps the 1.5 aromatic contribution exact.
        twice = sum({BondOrder.SINGLE: 2, BondOrder.DOUBLE: 4,
                     BondOrder.TRIPLE: 6, BondOrder.AROMATIC: 3}[o] for o in orders)
        connections = sum(1 if o is BondOrder.AROMATIC else o.value for o in orders)
        if connections > max(valences):
            raise SmilesError(
                f"valence overflow on aromatic {raw.symbol}: {connections} connections",
                text, raw.position,
            )
        return max(valences[0] - twice // 2, 0)
    total = sum(o.value for o in orders)
    for v in valences:
        if v >= total:
            return v - total
    raise SmilesError(
        f"valence overflow on {raw.symbol}: bond-order sum {total} exceeds {max(valences)}",
        text, raw.position,
    )


def _expected_bare_h(atom: Atom, orders: list[BondOrder]) -> int | None:
    """Hydrogen count the parser would assign to this atom written bare.

    Returns None when the atom cannot legally be written without brackets.
    """
    valences = atom.element.default_valences
    if not valences:
        return None
    if atom.aromatic:
        twice = sum({BondOrder.SINGLE: 2, BondOrder.DOUBLE: 4,
                     BondOrder.TRIPLE: 6, BondOrder.AROMATIC: 3}[o] for o in orders)
        connections = sum(1 if o is BondOrder.AROMATIC else o.value for o in orders)
        if connections > max(valences):
            return None
        return max(valences[0] - twice // 2, 0)
    total = int(sum(o.value for o in orders))
    for v in valences:
        if v >= total:
            return v - total
    return None


def write_smiles(mol: Molecule) -> str:
    """Emit a (non-canonical) SMILES that re-parses to an isomorphic graph."""
    return ".".join(_component_smiles(mol, comp) for comp in mol.components())


def _component_smiles(mol: Molecule, component: list[int]) -> str:
    root = component[0]
    visited = {root}
    tree_children: dict[int, list[int]] = {i: [] for i in component}
    back_edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    emit_order = [root]

    # Depth-first traversal with live edge classification, so ring-closure
    # digits land where a hand-written SMILES would put them.
    stack: list[tuple[int, list[tuple[int, Bond]]]] = [
        (root, sorted(mol.neighbors(root), key=lambda nb: nb[0]))
    ]
    while stack:
        u, neighbors = stack[-1]
        moved = False
        while neighbors:
            v, bond = neighbors.pop(0)
            if bond.key in seen_edges:
                continue
            seen_edges.add(bond.key)
            if v in visited:
                back_edges.append((u, v))
                continue
            visited.add(v)
            tree_children[u].append(v)
            emit_order.append(v)
            stack.append((v, sorted(mol.neighbors(v), key=lambda nb: nb[0])))
            moved = True
            break
        if not moved:
            stack.pop()

    # Ring-closure numbering: allocate at the first-emitted endpoint.
    emit_rank = {a: k for k, a in enumerate(emit_order)}
    closures: dict[int, list[tuple[int, int]]] = {i: [] for i in component}
    for number, (u, v) in enumerate(
        sorted(back_edges, key=lambda e: min(emit_rank[e[0]], emit_rank[e[1]])), start=1
    ):
        first, second = (u, v) if emit_rank[u] < emit_rank[v] else (v, u)
        closures[first].append((second, number))
        closures[second].append((first, number))

    out: list[str] = []
    work: list[tuple] = [("atom", root, None)]
    while work:
        item = work.pop()
        if item[0] == "text":
            out.append(item[1])
            continue
        _, u, incoming = item
        if incoming is not None:
            out.append(_bond_token(mol, incoming))
        out.append(_atom_token(mol, u))
        for partner, number in closures[u]:
            if emit_rank[u] < emit_rank[partner]:
                out.append(_bond_token(mol, mol.bond_between(u, partner)))
            out.append(str(number) if number < 10 else f"%{number:02d}")
        children = tree_children[u]
        pending: list[tuple] = []
        for child in children[:-1]:
            pending.append(("text", "("))
            pending.append(("atom", child, mol.bond_between(u, child)))
            pending.append(("text", ")"))
        if children:
            pending.append(("atom", children[-1], mol.bond_between(u, children[-1])))
        work.extend(reversed(pending))
    return "".join(out)


def _bond_token(mol: Molecule, bond: Bond) -> str:
    if bond.order is BondOrder.DOUBLE:
        return "="
    if bond.order is BondOrder.TRIPLE:
        return "#"
    if bond.order is BondOrder.SINGLE:
        # A plain bond between two aromatic atoms would re-parse as aromatic.
        if mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic:
            return "-"
        return ""
    return ""  # aromatic: default between two aromatic atoms


def _atom_token(mol: Molecule, index: int) -> str:
    atom = mol.atoms[index]
    symbol = atom.symbol.lower() if atom.aromatic else atom.symbol
    orders = [b.order for b in mol.bonds_of(index)]
    bare_ok = (
        atom.element.organic_subset
        and atom.formal_charge == 0
        and atom.isotope is None
        and (not atom.aromatic or atom.symbol in AROMATIC_ELEMENTS)
        and _expected_bare_h(atom, orders) == atom.total_h
    )
    if bare_ok:
        return symbol
    h = atom.total_h
    htok = "" if h == 0 else ("H" if h == 1 else f"H{h}")
    charge = atom.formal_charge
    if charge == 0:
        ctok = ""
    elif charge == 1:
        ctok = "+"
    elif charge == -1:
        ctok = "-"
    else:
        ctok = f"{charge:+d}"
    itok = str(atom.isotope) if atom.isotope is not None else ""
    return f"[{itok}{symbol}{htok}{ctok}]"
