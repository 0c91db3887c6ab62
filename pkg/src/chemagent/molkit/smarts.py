"""SMARTS pattern parsing for the documented primitive subset.

Atom primitives: element symbols (uppercase = aliphatic, lowercase aromatic),
``#n`` atomic number, ``*`` wildcard, ``a``/``A`` aromatic/aliphatic, ``Dn``
degree, ``Hn`` total hydrogen count (bare H reads as H1), ``Xn`` connectivity,
``Rn`` ring membership, ``rn`` smallest-ring size, and ``+``/``-`` charges.
Bond primitives: ``- = # : ~`` and ring-bond ``@``.  Logical operators on both
with precedence ``!`` > ``&`` (or juxtaposition) > ``,`` > ``;``.

Unsupported Daylight features (recursive ``$(...)``, stereo, component
grouping, reaction arrows, explicit-hydrogen atoms) are rejected by name so
curated pattern files can count skips instead of aborting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..periodic import AROMATIC_ELEMENTS, periodic_table


class SmartsError(ValueError):
    def __init__(self, message: str, text: str, position: int, feature: str | None = None):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.message = message
        self.text = text
        self.position = position
        self.feature = feature  # set when an unsupported feature was named


# ---------------------------------------------------------------------------
# Predicate expression trees (shared by atom and bond expressions)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Prim:
    code: str
    value: Union[int, str, None] = None

    def __repr__(self):
        return f"{self.code}({self.value})" if self.value is not None else self.code


@dataclass(frozen=True)
class Not:
    expr: "Expr"


@dataclass(frozen=True)
class And:
    parts: tuple["Expr", ...]


@dataclass(frozen=True)
class Or:
    parts: tuple["Expr", ...]


Expr = Union[Prim, Not, And, Or]

# Bond expression for an unwritten bond: single-or-aromatic.
DEFAULT_BOND = Or((Prim("bond", "-"), Prim("bond", ":")))


@dataclass(frozen=True)
class PatternEdge:
    i: int
    j: int
    expr: Expr


class Pattern:
    """A connected query graph over atom and bond predicates."""

    def __init__(self, nodes: list[Expr], edges: list[PatternEdge], source_text: str):
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self.source_text = source_text
        adjacency: list[list[tuple[int, Expr]]] = [[] for _ in nodes]
        for edge in edges:
            adjacency[edge.i].append((edge.j, edge.expr))
            adjacency[edge.j].append((edge.i, edge.expr))
        self.adjacency = tuple(tuple(lst) for lst in adjacency)

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return f"Pattern({self.source_text!r}, nodes={len(self.nodes)})"


_BOND_PRIMS = "-=#:~@"
_ORGANIC_TOKENS = ("Cl", "Br", "B", "C", "N", "O", "P", "S", "F", "I")
_AROMATIC_TOKENS = ("b", "c", "n", "o", "p", "s")

_ASCII_DIGITS = frozenset("0123456789")

_UNSUPPORTED = {
    "$": "recursive SMARTS $(...)",
    "/": "stereo bond markers",
    "\\": "stereo bond markers",
    ">": "reaction arrows",
    ".": "disconnected component patterns",
}


def parse_smarts(text: str) -> Pattern:
    """Parse a SMARTS string over the documented subset.

    Unsupported Daylight features raise SmartsError with ``feature`` set so
    callers (pattern-set loaders) can record a skip instead of failing.
    """
    if not text:
        raise SmartsError("empty SMARTS", text, 0)
    parser = _SmartsParser(text)
    return parser.parse()


class _SmartsParser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.nodes: list[Expr] = []
        self.edges: list[PatternEdge] = []
        self.prev: Optional[int] = None
        self.pending: Optional[Expr] = None
        self.pending_pos = 0
        self.stack: list[int] = []
        self.ring_open: dict[int, tuple[int, Optional[Expr], int]] = {}

    def error(self, message: str, feature: str | None = None):
        raise SmartsError(message, self.text, self.i, feature)

    def parse(self) -> Pattern:
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch in _UNSUPPORTED:
                self.error(f"unsupported feature: {_UNSUPPORTED[ch]}", _UNSUPPORTED[ch])
            elif ch == "[":
                self._bracket_atom()
            elif ch == "*" or ch.isalpha():
                self._bare_atom()
            elif ch in _BOND_PRIMS or ch == "!":
                if self.pending is not None:
                    self.error("two consecutive bond expressions")
                self.pending_pos = self.i
                self.pending = self._bond_expr()
            elif ch in _ASCII_DIGITS or ch == "%":
                self._ring_closure()
            elif ch == "(":
                if self.prev is None:
                    self.error("unsupported feature: component grouping", "component grouping")
                if self.pending is not None:
                    self.error("bond expression before branch opening")
                self.stack.append(self.prev)
                self.i += 1
            elif ch == ")":
                if not self.stack:
                    self.error("unbalanced parenthesis")
                if self.pending is not None:
                    self.error("dangling bond expression before ')'")
                self.prev = self.stack.pop()
                self.i += 1
            else:
                self.error(f"unexpected character {ch!r}")
        if self.stack:
            self.error("unbalanced parenthesis")
        if self.pending is not None:
            raise SmartsError("dangling bond expression", self.text, self.pending_pos)
        if self.ring_open:
            num, (_, _, pos) = next(iter(self.ring_open.items()))
            raise SmartsError(f"unmatched ring-closure digit {num}", self.text, pos)
        if not self.nodes:
            self.error("no atoms in SMARTS")
        self._check_connected()
        return Pattern(self.nodes, self.edges, self.text)

    # -- atoms --------------------------------------------------------------

    def _add_node(self, expr: Expr) -> None:
        self.nodes.append(expr)
        idx = len(self.nodes) - 1
        if self.prev is not None:
            bond = self.pending if self.pending is not None else DEFAULT_BOND
            self.edges.append(PatternEdge(self.prev, idx, bond))
        elif self.pending is not None:
            raise SmartsError("bond expression with no preceding atom", self.text, self.pending_pos)
        self.pending = None
        self.prev = idx

    def _bare_atom(self) -> None:
        ch = self.text[self.i]
        if ch == "*":
            self._add_node(Prim("wild"))
            self.i += 1
            return
        for cand in _ORGANIC_TOKENS:
            if self.text.startswith(cand, self.i):
                self._add_node(And((Prim("elem", cand), Prim("aliphatic"))))
                self.i += len(cand)
                return
        if ch in _AROMATIC_TOKENS:
            self._add_node(And((Prim("elem", ch.upper()), Prim("aromatic"))))
            self.i += 1
            return
        if ch == "a":
            self._add_node(Prim("aromatic"))
            self.i += 1
            return
        if ch == "A":
            self._add_node(Prim("aliphatic"))
            self.i += 1
            return
        self.error(f"unknown atom symbol {ch!r}")

    def _bracket_atom(self) -> None:
        start = self.i
        end = self.text.find("]", start)
        if end == -1:
            self.error("unterminated bracket expression")
        body = self.text[start + 1 : end]
        if not body:
            self.error("empty bracket expression")
        expr = _AtomExprParser(body, self.text, start + 1).parse()
        self.i = start  # _add_node may raise with a sensible position
        self._add_node(expr)
        self.i = end + 1

    # -- bonds --------------------------------------------------------------

    def _bond_expr(self) -> Expr:
        expr = self._bond_weak_and()
        return expr

    def _bond_weak_and(self) -> Expr:
        parts = [self._bond_or()]
        while self.i < len(self.text) and self.text[self.i] == ";":
            self.i += 1
            parts.append(self._bond_or())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _bond_or(self) -> Expr:
        parts = [self._bond_strong_and()]
        while self.i < len(self.text) and self.text[self.i] == ",":
            self.i += 1
            parts.append(self._bond_strong_and())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _bond_strong_and(self) -> Expr:
        parts = [self._bond_not()]
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch == "&":
                self.i += 1
                parts.append(self._bond_not())
            elif ch in _BOND_PRIMS or ch == "!":
                parts.append(self._bond_not())
            else:
                break
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _bond_not(self) -> Expr:
        if self.i >= len(self.text):
            self.error("dangling bond expression")
        if self.text[self.i] == "!":
            self.i += 1
            if self.i >= len(self.text):
                self.error("dangling '!' in bond expression")
            return Not(self._bond_not())
        ch = self.text[self.i]
        if ch in ("/", "\\"):
            self.error("unsupported feature: stereo bond markers", "stereo bond markers")
        if ch not in _BOND_PRIMS:
            self.error(f"expected bond primitive, found {ch!r}")
        self.i += 1
        return Prim("bond", ch)

    # -- ring closures ------------------------------------------------------

    def _ring_closure(self) -> None:
        if self.prev is None:
            self.error("ring closure before any atom")
        ch = self.text[self.i]
        if ch == "%":
            if self.i + 2 >= len(self.text) or not all(c in _ASCII_DIGITS for c in self.text[self.i + 1 : self.i + 3]):
                self.error("% ring closure needs two digits")
            num = int(self.text[self.i + 1 : self.i + 3])
            width = 3
        else:
            num = int(ch)
            width = 1
        if num in self.ring_open:
            other, other_bond, _ = self.ring_open.pop(num)
            if other == self.prev:
                self.error("ring closure bonds an atom to itself")
            if self.pending is not None and other_bond is not None:
                expr: Expr = And((self.pending, other_bond))
            else:
                expr = self.pending or other_bond or DEFAULT_BOND
            self.edges.append(PatternEdge(other, self.prev, expr))
            self.pending = None
        else:
            self.ring_open[num] = (self.prev, self.pending, self.i)
            self.pending = None
        self.i += width

    def _check_connected(self) -> None:
        if not self.nodes:
            return
        seen = {0}
        stack = [0]
        adjacency: dict[int, list[int]] = {k: [] for k in range(len(self.nodes))}
        for edge in self.edges:
            adjacency[edge.i].append(edge.j)
            adjacency[edge.j].append(edge.i)
        while stack:
            u = stack.pop()
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != len(self.nodes):
            raise SmartsError("pattern graph is not connected", self.text, 0)


class _AtomExprParser:
    """Parses the contents of one bracket expression."""

    def __init__(self, body: str, full_text: str, offset: int):
        self.body = body
        self.full_text = full_text
        self.offset = offset
        self.i = 0

    def error(self, message: str, feature: str | None = None):
        raise SmartsError(message, self.full_text, self.offset + self.i, feature)

    def parse(self) -> Expr:
        expr = self._weak_and()
        if self.i < len(self.body):
            self.error(f"unexpected character {self.body[self.i]!r} in bracket expression")
        return expr

    def _weak_and(self) -> Expr:
        parts = [self._or()]
        while self.i < len(self.body) and self.body[self.i] == ";":
            self.i += 1
            parts.append(self._or())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _or(self) -> Expr:
        parts = [self._strong_and()]
        while self.i < len(self.body) and self.body[self.i] == ",":
            self.i += 1
            parts.append(self._strong_and())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _strong_and(self) -> Expr:
        parts = [self._not()]
        while self.i < len(self.body) and self.body[self.i] not in ",;":
            if self.body[self.i] == "&":
                self.i += 1
            parts.append(self._not())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _not(self) -> Expr:
        if self.i < len(self.body) and self.body[self.i] == "!":
            self.i += 1
            if self.i >= len(self.body):
                self.error("dangling '!' in bracket expression")
            return Not(self._not())
        return self._primitive()

    def _digits(self, default: int | None = None) -> int | None:
        start = self.i
        while self.i < len(self.body) and self.body[self.i] in _ASCII_DIGITS:
            self.i += 1
        if self.i == start:
            return default
        return int(self.body[start : self.i])

    def _primitive(self) -> Expr:
        if self.i >= len(self.body):
            self.error("expected atom primitive")
        ch = self.body[self.i]
        if ch == "$":
            self.error("unsupported feature: recursive SMARTS $(...)", "recursive SMARTS $(...)")
        if ch == "@":
            self.error("unsupported feature: stereo specifications", "stereo specifications")
        if ch == "*":
            self.i += 1
            return Prim("wild")
        if ch == "#":
            self.i += 1
            num = self._digits()
            if num is None:
                self.error("'#' needs an atomic number")
            return Prim("anum", num)
        if ch == "+":
            self.i += 1
            if self.i < len(self.body) and self.body[self.i] == "+":
                self.i += 1
                return Prim("charge", 2)
            return Prim("charge", self._digits(default=1))
        if ch == "-":
            self.i += 1
            if self.i < len(self.body) and self.body[self.i] == "-":
                self.i += 1
                return Prim("charge", -2)
            return Prim("charge", -self._digits(default=1))
        if ch == "a":
            self.i += 1
            return Prim("aromatic")
        if ch == "A":
            self.i += 1
            return Prim("aliphatic")
        if ch == "D":
            self.i += 1
            return Prim("degree", self._digits(default=1))
        if ch == "H":
            self.i += 1
            return Prim("hcount", self._digits(default=1))
        if ch == "X":
            self.i += 1
            return Prim("connectivity", self._digits(default=1))
        if ch == "R":
            self.i += 1
            return Prim("ring_membership", self._digits(default=None))
        if ch == "r":
            self.i += 1
            return Prim("ring_size", self._digits(default=None))
        if ch in _AROMATIC_TOKENS:
            self.i += 1
            return And((Prim("elem", ch.upper()), Prim("aromatic")))
        if ch.isupper():
            table = periodic_table()
            two = self.body[self.i : self.i + 2]
            if len(two) == 2 and two[1].islower() and two in table:
                self.i += 2
                return And((Prim("elem", two), Prim("aliphatic")))
            if ch in table:
                self.i += 1
                return And((Prim("elem", ch), Prim("aliphatic")))
            self.error(f"unknown element symbol {ch!r}")
        if ch in _ASCII_DIGITS:
            self.error("isotope specifications are not in the SMARTS subset")
        self.error(f"unexpected character {ch!r} in bracket expression")
