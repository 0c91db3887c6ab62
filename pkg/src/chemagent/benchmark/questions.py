"""Benchmark question generation.

Each tool has a small family of natural-language phrasings; molecules are
sampled (with replacement) from the shipped list.  Sampling is seeded per
tool, so the qualitative and quantitative halves generated separately are
byte-identical to the corresponding halves of the full set under the same
seed.  Gold answers are computed by invoking the tool directly.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass

from ..assets import resolve_asset
from ..molkit import SmilesError, parse_smiles
from ..toolbox import REAL_2DP, ToolRegistry, default_registry, invoke

log = logging.getLogger(__name__)

QUALITATIVE = "qualitative"
QUANTITATIVE = "quantitative"
FULL = "full"
SET_NAMES = (QUALITATIVE, QUANTITATIVE, FULL)

TEMPLATES: dict[str, tuple[str, ...]] = {
    "calculate_molwt": (
        "What is the molecular weight of {smiles}?",
        "Calculate the molecular weight of {smiles}.",
    ),
    "calculate_logp": (
        "What is the LogP of {smiles}?",
        "Calculate the LogP of {smiles}.",
    ),
    "calculate_tpsa": (
        "What is the TPSA of {smiles}?",
        "Calculate the TPSA of {smiles}.",
    ),
    "calculate_qed": (
        "What is the QED of {smiles}?",
        "What is the quantitative estimate of drug-likeness of {smiles}?",
    ),
    "calculate_sa": (
        "What is the synthetic accessibility score of {smiles}?",
        "Calculate the synthetic accessibility score of {smiles}.",
    ),
    "check_bbb_permeant": (
        "Does {smiles} pass the blood brain barrier?",
        "Is {smiles} blood-brain barrier permeant?",
    ),
    "check_gi_absorption": (
        "What is the GI absorption of {smiles}?",
        "Does {smiles} have high or low gastrointestinal absorption?",
    ),
    "check_druglikeness": (
        "Does {smiles} pass the Lipinski rule of 5?",
        "Is {smiles} druglike according to the rule of five?",
    ),
    "check_brenk": (
        "Does {smiles} pass the Brenk filter?",
        "Does {smiles} clear the Brenk structural alerts?",
    ),
    "check_pains": (
        "Does {smiles} pass the PAINS filter?",
        "Is {smiles} free of PAINS liabilities?",
    ),
}


def _template_regex(template: str) -> re.Pattern:
    before, after = template.split("{smiles}")
    return re.compile("^" + re.escape(before) + r"(?P<smiles>\S+?)" + re.escape(after) + "$")

_RESOLVERS: list[tuple[str, re.Pattern]] = [
    (tool, _template_regex(template))
    for tool, templates in TEMPLATES.items()
    for template in templates
]


def resolve_question(question: str) -> tuple[str, str] | None:
    """Invert a generated question back to (tool name, SMILES)."""
    for tool, regex in _RESOLVERS:
        m = regex.match(question.strip())
        if m:
            return tool, m.group("smiles")
    return None


@dataclass(frozen=True)
class QuestionRecord:
    id: str
    tool: str
    smiles: str
    question: str
    gold: str
    kind: str  # qualitative | quantitative


@dataclass(frozen=True)
class BenchmarkSet:
    name: str
    questions: tuple[QuestionRecord, ...]

    def __len__(self) -> int:
        return len(self.questions)


def load_molecules(data_dir: str | None = None) -> list[str]:
    path = resolve_asset("molecules.txt", data_dir)
    return [
        line.strip()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def tool_kind(output_kind: str) -> str:
    return QUANTITATIVE if output_kind == REAL_2DP else QUALITATIVE


def generate(
    set_name: str,
    molecules: list[str] | None = None,
    seed: int = 0,
    per_tool: int = 100,
    registry: ToolRegistry | None = None,
    data_dir: str | None = None,
) -> BenchmarkSet:
    if set_name not in SET_NAMES:
        raise ValueError(f"unknown set name {set_name!r}; expected one of {SET_NAMES}")
    registry = registry or default_registry(data_dir)
    if molecules is None:
        molecules = load_molecules(data_dir)

    valid = []
    for smiles in molecules:
        try:
            parse_smiles(smiles)
            valid.append(smiles)
        except SmilesError as exc:
            log.warning("excluding molecule %r: %s", smiles, exc.message)
    if len(valid) < 10:
        raise ValueError(f"insufficient valid molecules: {len(valid)} (need at least 10)")

    tools = [
        tool for tool in registry
        if set_name == FULL or tool_kind(tool.output_kind) == set_name
    ]
    questions = []
    for tool in tools:
        templates = TEMPLATES[tool.name]
        rng = random.Random(f"{seed}:{tool.name}")
        for i in range(per_tool):
            smiles = rng.choice(valid)
            template = templates[rng.randrange(len(templates))]
            result = invoke(registry, tool.name, smiles)
            if not result.ok:
                raise ValueError(f"gold computation failed for {tool.name} on {smiles!r}: {result.text}")
            questions.append(
                QuestionRecord(
                    id=f"{tool.name}:{seed}:{i:03d}",
                    tool=tool.name,
                    smiles=smiles,
                    question=template.format(smiles=smiles),
                    gold=result.text,
                    kind=tool_kind(tool.output_kind),
                )
            )
    return BenchmarkSet(name=set_name, questions=tuple(questions))


def write_questions_csv(benchmark_set: BenchmarkSet, path) -> None:
    import csv

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "tool", "smiles", "question", "gold", "kind"])
        for q in benchmark_set.questions:
            writer.writerow([q.id, q.tool, q.smiles, q.question, q.gold, q.kind])
