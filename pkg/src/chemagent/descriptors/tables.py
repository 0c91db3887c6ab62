"""Loading and caching of the descriptor parameter tables.

Tables are parsed once per data directory and shared; all loaded structures
are immutable.  Pattern-driven tables (atom contributions, alerts) skip and
count entries the SMARTS engine cannot parse instead of failing, so curated
sets can grow beyond the supported subset.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from ..assets import read_table, resolve_asset
from ..molkit import Pattern, SmartsError, parse_smarts
from ..molkit.smarts import And, Expr, Not, Or, Prim
from ..periodic import periodic_table

log = logging.getLogger(__name__)


def first_node_elements(pattern: Pattern) -> frozenset[str] | None:
    """Element symbols pattern node 0 can possibly match, or None if open.

    Used to skip whole rules cheaply during atom typing.
    """

    def walk(expr: Expr) -> frozenset[str] | None:
        if isinstance(expr, Prim):
            if expr.code == "elem":
                return frozenset([expr.value])
            if expr.code == "anum":
                el = periodic_table().by_number(expr.value)
                return frozenset([el.symbol]) if el else frozenset()
            return None
        if isinstance(expr, And):
            for part in expr.parts:
                got = walk(part)
                if got is not None:
                    return got
            return None
        if isinstance(expr, Or):
            union: set[str] = set()
            for part in expr.parts:
                got = walk(part)
                if got is None:
                    return None
                union |= got
            return frozenset(union)
        if isinstance(expr, Not):
            return None
        return None

    return walk(pattern.nodes[0])


@dataclass(frozen=True)
class AtomRule:
    label: str
    pattern: Pattern
    value: float
    elements: frozenset[str] | None


@dataclass(frozen=True)
class CrippenTable:
    atom_rules: tuple[AtomRule, ...]
    hydrogen: dict[str, float]  # context key -> per-hydrogen contribution


@lru_cache(maxsize=None)
def crippen_table(data_dir: str | None = None) -> CrippenTable:
    atom_rules = []
    hydrogen = {}
    for label, smarts, value in read_table(resolve_asset("crippen.tsv", data_dir), 3):
        if label.startswith("H/"):
            hydrogen[label[2:]] = float(value)
            continue
        pattern = parse_smarts(smarts)
        atom_rules.append(AtomRule(label, pattern, float(value), first_node_elements(pattern)))
    if "default" not in hydrogen:
        raise ValueError("crippen.tsv must declare an H/default hydrogen contribution")
    return CrippenTable(tuple(atom_rules), hydrogen)


@dataclass(frozen=True)
class TpsaTable:
    no_rules: tuple[AtomRule, ...]   # nitrogen/oxygen environments
    sp_rules: tuple[AtomRule, ...]   # sulfur/phosphorus, behind include_s_p


@lru_cache(maxsize=None)
def tpsa_table(data_dir: str | None = None) -> TpsaTable:
    no_rules, sp_rules = [], []
    for smarts, value in read_table(resolve_asset("tpsa.tsv", data_dir), 2):
        pattern = parse_smarts(smarts)
        elements = first_node_elements(pattern)
        if elements is None:
            raise ValueError(f"tpsa.tsv pattern {smarts!r} has no definite first-node element")
        rule = AtomRule(smarts, pattern, float(value), elements)
        if elements <= {"S", "P"}:
            sp_rules.append(rule)
        else:
            no_rules.append(rule)
    return TpsaTable(tuple(no_rules), tuple(sp_rules))


@dataclass(frozen=True)
class AdsCoefficients:
    a: float
    b: float
    c: float
    d: float
    e: float
    f: float
    weight: float
    dmax: float

    def raw(self, x: float) -> float:
        first = 1.0 + math.exp(-(x - self.c + self.d / 2.0) / self.e)
        second = 1.0 + math.exp(-(x - self.c - self.d / 2.0) / self.f)
        return self.a + self.b / first * (1.0 - 1.0 / second)

    def desirability(self, x: float) -> float:
        return self.raw(x) / self.dmax


QED_PROPERTIES = ("MW", "ALOGP", "HBA", "HBD", "PSA", "ROTB", "AROM", "ALERTS")


def _function_maximum(coeffs: AdsCoefficients) -> float:
    # Coarse scan, then interval refinement; the functions are smooth and
    # single-peaked over any range that matters.
    lo, hi = -100.0, 1500.0
    best_x = lo
    for _ in range(6):
        step = (hi - lo) / 400.0
        best = -math.inf
        x = lo
        while x <= hi:
            v = coeffs.raw(x)
            if v > best:
                best, best_x = v, x
            x += step
        lo, hi = best_x - 2 * step, best_x + 2 * step
    return best


@lru_cache(maxsize=None)
def qed_params(data_dir: str | None = None) -> dict[str, AdsCoefficients]:
    out = {}
    for prop, a, b, c, d, e, f, weight in read_table(resolve_asset("qed_params.tsv", data_dir), 8):
        coeffs = AdsCoefficients(
            float(a), float(b), float(c), float(d), float(e), float(f), float(weight), dmax=1.0
        )
        dmax = _function_maximum(coeffs)
        out[prop] = AdsCoefficients(
            coeffs.a, coeffs.b, coeffs.c, coeffs.d, coeffs.e, coeffs.f, coeffs.weight, dmax
        )
    missing = set(QED_PROPERTIES) - set(out)
    if missing:
        raise ValueError(f"qed_params.tsv is missing properties: {sorted(missing)}")
    return out


@dataclass(frozen=True)
class SaParams:
    fragment_scores: dict[str, float]
    size_exponent: float
    macrocycle_penalty: float
    symmetry_weight: float
    missing_fragment_score: float
    raw_min: float
    raw_max: float
    smooth_threshold: float


@lru_cache(maxsize=None)
def sa_params(data_dir: str | None = None) -> SaParams:
    coeffs: dict[str, float] = {}
    fragments: dict[str, float] = {}
    for kind, key, value in read_table(resolve_asset("sa_params.tsv", data_dir), 3):
        if kind == "coeff":
            coeffs[key] = float(value)
        elif kind == "frag":
            fragments[key] = float(value)
        else:
            raise ValueError(f"sa_params.tsv: unknown row kind {kind!r}")
    return SaParams(
        fragment_scores=fragments,
        size_exponent=coeffs.get("size_exponent", 1.005),
        macrocycle_penalty=coeffs.get("macrocycle_penalty", math.log10(2.0)),
        symmetry_weight=coeffs.get("symmetry_weight", 0.5),
        missing_fragment_score=coeffs.get("missing_fragment_score", -4.0),
        raw_min=coeffs.get("raw_min", -4.0),
        raw_max=coeffs.get("raw_max", 2.5),
        smooth_threshold=coeffs.get("smooth_threshold", 8.0),
    )


@dataclass(frozen=True)
class Ellipse:
    cx: float
    cy: float
    rx: float
    ry: float
    theta_deg: float

    def __post_init__(self):
        if self.rx <= 0 or self.ry <= 0:
            raise ValueError("ellipse semi-axes must be positive")

    def contains(self, x: float, y: float) -> bool:
        theta = math.radians(self.theta_deg)
        dx, dy = x - self.cx, y - self.cy
        xr = dx * math.cos(theta) + dy * math.sin(theta)
        yr = -dx * math.sin(theta) + dy * math.cos(theta)
        return (xr / self.rx) ** 2 + (yr / self.ry) ** 2 <= 1.0

    def contains_unrotated(self, x: float, y: float) -> bool:
        """Same test evaluated by rotating the ellipse instead of the point
        (algebraic identity used as a cross-check)."""
        theta = math.radians(self.theta_deg)
        cos_t, sin_t = math.cos(theta), math.sin(theta)
        dx, dy = x - self.cx, y - self.cy
        a = (cos_t / self.rx) ** 2 + (sin_t / self.ry) ** 2
        b = 2 * cos_t * sin_t * (1 / self.rx**2 - 1 / self.ry**2)
        c = (sin_t / self.rx) ** 2 + (cos_t / self.ry) ** 2
        return a * dx * dx + b * dx * dy + c * dy * dy <= 1.0


@dataclass(frozen=True)
class EggModel:
    yolk: Ellipse   # blood-brain barrier region
    white: Ellipse  # gastrointestinal absorption region


@lru_cache(maxsize=None)
def egg_model(data_dir: str | None = None) -> EggModel:
    ellipses = {}
    for name, cx, cy, rx, ry, theta in read_table(resolve_asset("egg.tsv", data_dir), 6):
        ellipses[name] = Ellipse(float(cx), float(cy), float(rx), float(ry), float(theta))
    if set(ellipses) != {"yolk", "white"}:
        raise ValueError("egg.tsv must define exactly the 'yolk' and 'white' ellipses")
    return EggModel(yolk=ellipses["yolk"], white=ellipses["white"])


@dataclass(frozen=True)
class AlertSet:
    name: str
    patterns: tuple[tuple[str, Pattern], ...]
    skipped_count: int


@lru_cache(maxsize=None)
def load_alert_set(name: str, data_dir: str | None = None) -> AlertSet:
    """Load a labeled pattern set; unsupported patterns are skipped, counted,
    and logged rather than aborting the load."""
    if name == "qed-alerts":
        # No separately curated list is shipped; the Brenk set stands in.
        try:
            resolve_asset("qed-alerts.smarts", data_dir)
        except FileNotFoundError:
            log.info("qed-alerts set not present; falling back to the brenk alert set")
            fallback = load_alert_set("brenk", data_dir)
            return AlertSet("qed-alerts", fallback.patterns, fallback.skipped_count)
    path = resolve_asset(f"{name}.smarts", data_dir)
    patterns = []
    labels = set()
    skipped = 0
    for label, smarts in read_table(path, 2):
        if label in labels:
            raise ValueError(f"{path.name}: duplicate alert label {label!r}")
        labels.add(label)
        try:
            patterns.append((label, parse_smarts(smarts)))
        except SmartsError as exc:
            skipped += 1
            log.warning("%s: skipping %s (%s)", path.name, label, exc.feature or exc.message)
    return AlertSet(name, tuple(patterns), skipped)
