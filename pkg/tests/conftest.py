import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chemagent.assets import default_data_dir


def load_corpus() -> list[str]:
    lines = (default_data_dir() / "molecules.txt").read_text().splitlines()
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


@pytest.fixture(scope="session")
def corpus() -> list[str]:
    return load_corpus()


# Spellings of the same molecular graph, for invariance checks.
SPELLING_PAIRS = [
    ("CCO", "OCC"),
    ("CC(C)O", "CC(O)C"),
    ("CC(C)O", "C(O)(C)C"),
    ("CC(C)=O", "CC(=O)C"),
    ("C1CCCCC1", "C2CCCCC2"),
    ("OC1CCCCC1", "C1CCC(CC1)O"),
    ("Oc1ccccc1", "c1cc(ccc1)O"),
    ("Cc1ccccc1", "c1ccccc1C"),
    ("Cc1ccccc1", "c1ccc(C)cc1"),
    ("Cc1ccccn1", "Cc1ncccc1"),
    ("c1ccc(cc1)N(C)C", "CN(C)c1ccccc1"),
    ("COc1ccccc1", "c1ccc(cc1)OC"),
    ("OCc1ccccc1", "c1ccc(cc1)CO"),
    ("OCC#C", "C#CCO"),
    ("CC(=O)O", "OC(=O)C"),
]
