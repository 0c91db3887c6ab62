"""Element data: symbols, masses, and the default-valence model.

The table is loaded from ``periodic_table.tsv`` (symbol, atomic number,
standard atomic weight, comma-separated default valences).  Exact isotope
masses come from ``isotopes.tsv``; unlisted isotopes fall back to the bare
mass number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .assets import read_table, resolve_asset

# Elements that may be written without brackets in SMILES, and the lowercase
# symbols the grammar accepts as aromatic atoms.
ORGANIC_SUBSET = frozenset({"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"})
AROMATIC_ELEMENTS = frozenset({"B", "C", "N", "O", "P", "S"})


@dataclass(frozen=True)
class Element:
    symbol: str
    atomic_number: int
    standard_weight: float
    default_valences: tuple[int, ...]

    @property
    def organic_subset(self) -> bool:
        return self.symbol in ORGANIC_SUBSET


class PeriodicTable:
    """Registry of elements keyed by symbol and atomic number."""

    def __init__(self, elements: list[Element], isotope_masses: dict[tuple[str, int], float]):
        self._by_symbol: dict[str, Element] = {}
        self._by_number: dict[int, Element] = {}
        self._isotope_masses = isotope_masses
        for el in elements:
            if el.symbol in self._by_symbol:
                raise ValueError(f"duplicate element symbol {el.symbol!r}")
            if el.standard_weight <= 0:
                raise ValueError(f"non-positive weight for {el.symbol!r}")
            if el.organic_subset and not el.default_valences:
                raise ValueError(f"organic-subset element {el.symbol!r} has no default valences")
            self._by_symbol[el.symbol] = el
            self._by_number[el.atomic_number] = el

    def get(self, symbol: str) -> Element | None:
        return self._by_symbol.get(symbol)

    def by_number(self, atomic_number: int) -> Element | None:
        return self._by_number.get(atomic_number)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._by_symbol

    def isotope_mass(self, symbol: str, mass_number: int) -> float:
        """Exact mass for an isotope, defaulting to the mass number itself."""
        return self._isotope_masses.get((symbol, mass_number), float(mass_number))

    @property
    def symbols(self) -> list[str]:
        return list(self._by_symbol)


@lru_cache(maxsize=None)
def periodic_table(data_dir: str | None = None) -> PeriodicTable:
    elements = []
    for symbol, z, weight, valences in read_table(resolve_asset("periodic_table.tsv", data_dir), 4):
        vals = tuple(int(v) for v in valences.split(",") if v.strip()) if valences.strip() else ()
        elements.append(Element(symbol, int(z), float(weight), vals))
    isotopes = {}
    for symbol, mass_number, mass in read_table(resolve_asset("isotopes.tsv", data_dir), 3):
        isotopes[(symbol, int(mass_number))] = float(mass)
    return PeriodicTable(elements, isotopes)
