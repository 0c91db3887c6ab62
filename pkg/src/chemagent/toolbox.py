"""The agent-facing tool registry: ten named tools, each taking a SMILES
string and returning a formatted answer string.

Numeric tools print two decimals with half-up rounding; categorical tools
answer Yes/No, High/Low, or True/False.  Errors (unknown tool, bad SMILES)
come back as observation strings, never exceptions, so the agent loop can
show them to the model and let it retry.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .descriptors import (
    alert_filter,
    boiled_egg,
    crippen_logp,
    get_alert_set,
    lipinski_pass,
    mol_weight,
    qed,
    sa_score,
    tpsa,
)
from .molkit import Molecule, SmilesError, parse_smiles

REAL_2DP = "real2dp"
YES_NO = "yes_no"
HIGH_LOW = "high_low"
TRUE_FALSE = "true_false"

OUTPUT_KINDS = (REAL_2DP, YES_NO, HIGH_LOW, TRUE_FALSE)


@dataclass(frozen=True)
class ToolSpec:
    name: str
    description: str
    output_kind: str
    compute: Callable[[Molecule], object]
    display_name: str
    input_kind: str = "SMILES"


@dataclass(frozen=True)
class ToolResult:
    tool: str
    input: str
    raw: object
    text: str
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def round2(value: float) -> str:
    """Two decimals, half-up (so 0.005 becomes 0.01, matching the printed
    answers the benchmark scores against)."""
    quantized = decimal.Decimal(repr(float(value))).quantize(
        decimal.Decimal("0.01"), rounding=decimal.ROUND_HALF_UP
    )
    return f"{quantized:.2f}"


def format_value(kind: str, raw: object) -> str:
    if kind == REAL_2DP:
        return round2(raw)
    if kind == YES_NO:
        return "Yes" if raw else "No"
    if kind == HIGH_LOW:
        return "High" if raw else "Low"
    if kind == TRUE_FALSE:
        return "True" if raw else "False"
    raise ValueError(f"unknown output kind {kind!r}")


class ToolRegistry:
    """Ordered, name-addressable set of tools."""

    def __init__(self, tools: list[ToolSpec]):
        self.tools = tuple(tools)
        self._by_name = {}
        for tool in tools:
            if tool.name in self._by_name:
                raise ValueError(f"duplicate tool name {tool.name!r}")
            if not tool.description:
                raise ValueError(f"tool {tool.name!r} has an empty description")
            if tool.output_kind not in OUTPUT_KINDS:
                raise ValueError(f"tool {tool.name!r} has unknown output kind")
            self._by_name[tool.name] = tool

    def lookup(self, name: str) -> Optional[ToolSpec]:
        return self._by_name.get(name)

    def names(self) -> list[str]:
        return [t.name for t in self.tools]

    def __len__(self) -> int:
        return len(self.tools)

    def __iter__(self):
        return iter(self.tools)


@lru_cache(maxsize=None)
def default_registry(data_dir: str | None = None) -> ToolRegistry:
    """The ten standard cheminformatics tools."""
    dd = data_dir

    def brenk(mol):
        return alert_filter(mol, get_alert_set("brenk", dd))[0]

    def pains(mol):
        return alert_filter(mol, get_alert_set("pains", dd))[0]

    tools = [
        ToolSpec(
            "calculate_molwt",
            "Compute the molecular weight of a molecule given its SMILES string.",
            REAL_2DP,
            lambda m: mol_weight(m, dd),
            "MolWt",
        ),
        ToolSpec(
            "calculate_logp",
            "Predict the octanol-water partition coefficient (LogP) of a molecule given its SMILES string.",
            REAL_2DP,
            lambda m: crippen_logp(m, dd),
            "LogP",
        ),
        ToolSpec(
            "calculate_tpsa",
            "Compute the topological polar surface area (TPSA) of a molecule given its SMILES string.",
            REAL_2DP,
            lambda m: tpsa(m, data_dir=dd),
            "TPSA",
        ),
        ToolSpec(
            "calculate_qed",
            "Compute the quantitative estimate of drug-likeness (QED) of a molecule given its SMILES string.",
            REAL_2DP,
            lambda m: qed(m, dd),
            "QED",
        ),
        ToolSpec(
            "calculate_sa",
            "Estimate the synthetic accessibility score of a molecule given its SMILES string.",
            REAL_2DP,
            lambda m: sa_score(m, dd),
            "SA",
        ),
        ToolSpec(
            "check_bbb_permeant",
            "Determine whether a molecule given as a SMILES string is blood-brain barrier permeant.",
            YES_NO,
            lambda m: boiled_egg(m, dd).bbb_permeant,
            "BBB Permeant",
        ),
        ToolSpec(
            "check_gi_absorption",
            "Determine whether a molecule given as a SMILES string has high or low gastrointestinal absorption.",
            HIGH_LOW,
            lambda m: boiled_egg(m, dd).gi_high,
            "GI Absorption",
        ),
        ToolSpec(
            "check_druglikeness",
            "Check whether a molecule given as a SMILES string passes the Lipinski rule of five.",
            TRUE_FALSE,
            lambda m: lipinski_pass(m, dd),
            "Druglikeness",
        ),
        ToolSpec(
            "check_brenk",
            "Check whether a molecule given as a SMILES string passes the Brenk structural alert filter.",
            TRUE_FALSE,
            brenk,
            "Brenk Filter",
        ),
        ToolSpec(
            "check_pains",
            "Check whether a molecule given as a SMILES string passes the PAINS assay-interference filter.",
            TRUE_FALSE,
            pains,
            "PAINS Filter",
        ),
    ]
    return ToolRegistry(tools)


def invoke(registry: ToolRegistry, name: str, input_text: str) -> ToolResult:
    """Run a tool by name; failures are returned as observation text."""
    tool = registry.lookup(name)
    if tool is None:
        message = f"unknown tool {name}; available: {', '.join(registry.names())}"
        return ToolResult(tool=name, input=input_text, raw=None, text=message, error=message)
    try:
        mol = parse_smiles(input_text.strip() if isinstance(input_text, str) else input_text)
    except SmilesError as exc:
        message = f"invalid SMILES: {exc.message}"
        return ToolResult(tool=name, input=input_text, raw=None, text=message, error=message)
    try:
        raw = tool.compute(mol)
    except Exception as exc:  # tool errors become observations, never raises
        message = f"tool {name} failed: {exc}"
        return ToolResult(tool=name, input=input_text, raw=None, text=message, error=message)
    return ToolResult(tool=name, input=input_text, raw=raw, text=format_value(tool.output_kind, raw))
