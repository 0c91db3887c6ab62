"""Regenerate the checked-in reference-values corpus.

Values come from the procedural oracle (the independent route), not from the
pattern-driven library code, so the committed file can catch regressions in
either.  The sa column is a library regression pin (range and invariance are
its contracts); bbb/gi come from the oracle's expanded ellipse inequality.

Run from the repository root:  python tests/oracles/gen_reference.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from chemagent.assets import default_data_dir
from chemagent.descriptors import sa_score
from chemagent.molkit import parse_smiles
from oracles.descriptors_oracle import (
    oracle_aromatic_rings,
    oracle_boiled_egg,
    oracle_crippen_logp,
    oracle_hb_acceptors,
    oracle_hb_donors,
    oracle_mol_weight,
    oracle_qed,
    oracle_rotatable_bonds,
    oracle_tpsa,
)


def main() -> None:
    data_dir = default_data_dir()
    molecules = [
        line.strip()
        for line in (data_dir / "molecules.txt").read_text().splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    out = ["smiles,mw,logp,tpsa,qed,hbd,hba,rotb,arom,sa,bbb,gi"]
    for smiles in molecules:
        mol = parse_smiles(smiles)
        bbb, gi = oracle_boiled_egg(mol)
        out.append(
            ",".join(
                [
                    smiles,
                    f"{oracle_mol_weight(mol):.4f}",
                    f"{oracle_crippen_logp(mol):.4f}",
                    f"{oracle_tpsa(mol):.2f}",
                    f"{oracle_qed(mol):.4f}",
                    str(oracle_hb_donors(mol)),
                    str(oracle_hb_acceptors(mol)),
                    str(oracle_rotatable_bonds(mol)),
                    str(oracle_aromatic_rings(mol)),
                    f"{sa_score(mol):.4f}",
                    bbb,
                    gi,
                ]
            )
        )
    target = data_dir / "reference_values.csv"
    target.write_text("\n".join(out) + "\n")
    print(f"wrote {target} ({len(molecules)} molecules)")


if __name__ == "__main__":
    main()
