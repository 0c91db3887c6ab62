"""BOILED-Egg classification: blood-brain-barrier permeation (yolk) and
gastrointestinal absorption (white) from the molecule's (TPSA, WLOGP) point.
The two ellipse tests are independent."""

from __future__ import annotations

from dataclasses import dataclass

from ..molkit import Molecule
from .crippen import crippen_logp
from .tables import egg_model
from .tpsa import tpsa


@dataclass(frozen=True)
class EggResult:
    bbb_permeant: bool
    gi_high: bool
    tpsa: float
    wlogp: float


def boiled_egg(mol: Molecule, data_dir: str | None = None) -> EggResult:
    model = egg_model(data_dir)
    x = tpsa(mol, data_dir=data_dir)
    y = crippen_logp(mol, data_dir)
    return EggResult(
        bbb_permeant=model.yolk.contains(x, y),
        gi_high=model.white.contains(x, y),
        tpsa=x,
        wlogp=y,
    )
