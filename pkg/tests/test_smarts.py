"""SMARTS parsing and matching tests, including exact agreement with the
brute-force enumeration oracle on small pattern/molecule pairs."""

import random

import pytest

from chemagent.molkit import (
    SmartsError,
    has_match,
    match,
    parse_smarts,
    parse_smiles,
)
from oracles.brute import brute_match

# Patterns (<= 4 nodes) crossed against small corpus molecules for the
# oracle-equality check; they cover every primitive the subset documents.
ORACLE_PATTERNS = [
    "[#6]",
    "[#6]~[#8]",
    "[OH]",
    "[OX2H1]",
    "[C,N]",
    "[!C;!N]",
    "[cH]",
    "[c][#17]",
    "C=O",
    "C#N",
    "[CX4][N,O,S]",
    "[R]",
    "[R2]",
    "[r5]",
    "[r6;a]",
    "*~*~*",
    "[C;H2]([C])[C]",
    "[N+]",
    "[O-]",
    "[#6]@[#6]",
    "[#6]!@[#6]",
    "[!#6;!#1]~[!#6;!#1]",
    "[D3]",
    "[X4]",
    "[a]:[a]:[a]",
    "[A;!#1]~[a]",
    "C(=O)[OH]",
    "[#7;!H0]",
    "[C]=[C]-[C]=[C]",
    "[s,o]",
    "[cH0]",
    "[#8]=[#6]-[#8]",
]

SMALL_MOLECULES = [
    "C",
    "CCO",
    "CC(=O)O",
    "c1ccccc1",
    "c1ccncc1",
    "c1ccoc1",
    "C1CC1",
    "C1CCCCC1",
    "CC(C)=O",
    "C(CS)O",
    "CCON=O",
    "CCCC=O",
    "C#C",
    "C=CC=C",
    "[NH4+]",
    "CC[O-]",
    "Clc1ccccc1",
    "O=C=O",
    "C1CN1",
    "CC#N",
    "OCC(O)CO",
    "c1cc[nH]c1",
]


class TestParsing:
    def test_oh_pattern_shape(self):
        p = parse_smarts("[OH]")
        assert len(p.nodes) == 1
        assert len(p.edges) == 0

    def test_two_nodes_any_bond(self):
        p = parse_smarts("[#6]~[#8]")
        assert len(p.nodes) == 2
        assert len(p.edges) == 1

    def test_branching_and_rings(self):
        p = parse_smarts("C1(=O)CCC1")
        assert len(p.nodes) == 5
        assert len(p.edges) == 5

    @pytest.mark.parametrize(
        "text,feature",
        [
            ("[$(cc)]", "recursive"),
            ("C/C=C/C", "stereo"),
            ("[C@H](N)C", "stereo"),
            ("(C).(C)", "component grouping"),
            ("C.C", "disconnected"),
            ("CC>>CC", "reaction"),
        ],
    )
    def test_unsupported_features_named(self, text, feature):
        with pytest.raises(SmartsError) as exc:
            parse_smarts(text)
        assert exc.value.feature is not None
        assert feature.split()[0] in exc.value.feature

    @pytest.mark.parametrize("bad", ["", "[", "[]", "[C", "C(", "C1C", "[#]", "[Zz]", "[13C]", "!C"])
    def test_syntax_errors_positioned(self, bad):
        with pytest.raises(SmartsError) as exc:
            parse_smarts(bad)
        assert exc.value.position >= 0

    def test_h_primitive_means_exact_count(self):
        # [OH] is O with exactly one hydrogen: water does not match
        p = parse_smarts("[OH]")
        assert not match(p, parse_smiles("O"))
        assert match(p, parse_smiles("CO"))

    def test_default_bond_is_single_or_aromatic(self):
        p = parse_smarts("CC")
        assert match(p, parse_smiles("CC"))
        assert not match(p, parse_smiles("C=C"))
        q = parse_smarts("cc")
        assert match(q, parse_smiles("c1ccccc1"))


class TestSemantics:
    def test_two_carbons_in_ethanol(self):
        ms = match(parse_smarts("[#6]"), parse_smiles("CCO"))
        assert len(ms.mappings) == 2
        assert ms.unique_atom_sets == 2

    def test_hydroxyl_in_ethanol(self):
        ms = match(parse_smarts("[OH]"), parse_smiles("CCO"))
        assert ms.unique_atom_sets == 1

    def test_symmetric_matches_counted_per_mapping(self):
        ms = match(parse_smarts("[cH]"), parse_smiles("c1ccccc1"))
        assert len(ms.mappings) == 6

    def test_unique_atom_sets_deduplicates(self):
        # the C-C bond in ethane matches in both directions
        ms = match(parse_smarts("CC"), parse_smiles("CC"))
        assert len(ms.mappings) == 2
        assert ms.unique_atom_sets == 1

    def test_charge_primitives(self):
        assert match(parse_smarts("[N+]"), parse_smiles("[NH4+]"))
        assert not match(parse_smarts("[N+]"), parse_smiles("N"))
        assert match(parse_smarts("[O-]"), parse_smiles("CC[O-]"))

    def test_degree_vs_connectivity(self):
        mol = parse_smiles("CC(C)C")
        assert match(parse_smarts("[CD3]"), mol)       # central carbon: 3 heavy neighbors
        assert not match(parse_smarts("[CD4]"), mol)
        assert match(parse_smarts("[CX4]"), mol)       # every carbon: 4 total connections

    def test_ring_primitives(self):
        spiro = parse_smiles("C1CCC2(CC1)CCCC2")
        assert match(parse_smarts("[R2]"), spiro).unique_atom_sets == 1
        assert match(parse_smarts("[r5]"), spiro).unique_atom_sets == 5
        assert match(parse_smarts("[R0]"), parse_smiles("CC1CC1")).unique_atom_sets == 1

    def test_ring_bond_primitive(self):
        mol = parse_smiles("CC1CC1")
        ring_pairs = match(parse_smarts("[#6]@[#6]"), mol)
        assert ring_pairs.unique_atom_sets == 3
        acyclic_pairs = match(parse_smarts("[#6]!@[#6]"), mol)
        assert acyclic_pairs.unique_atom_sets == 1

    def test_aromatic_vs_aliphatic_element(self):
        benzene = parse_smiles("c1ccccc1")
        assert not match(parse_smarts("[C]"), benzene)
        assert match(parse_smarts("[c]"), benzene)
        assert match(parse_smarts("[#6]"), benzene)

    def test_logic_precedence(self):
        # comma binds tighter than semicolon: "[c,C;H1]" = (c or C) and H1
        mol = parse_smiles("Cc1ccccc1")
        ms = match(parse_smarts("[c,C;H1]"), mol)
        assert ms.unique_atom_sets == 5  # ring CH only; the methyl has H3

    def test_not_operator(self):
        ms = match(parse_smarts("[!C;!O]"), parse_smiles("CCON=O"))
        assert ms.unique_atom_sets == 1  # just the nitrogen

    def test_bond_or(self):
        ms = match(parse_smarts("C=,#C"), parse_smiles("C=CC#CC"))
        assert ms.unique_atom_sets == 2


class TestOracleEquality:
    def test_matches_equal_brute_force(self):
        for pattern_text in ORACLE_PATTERNS:
            pattern = parse_smarts(pattern_text)
            assert len(pattern.nodes) <= 4
            for smiles in SMALL_MOLECULES:
                mol = parse_smiles(smiles)
                if len(mol.atoms) > 8:
                    continue
                got = list(match(pattern, mol).mappings)
                expected = brute_match(pattern, mol)
                assert got == expected, f"{pattern_text!r} vs {smiles!r}"

    def test_has_match_agrees(self):
        for pattern_text in ORACLE_PATTERNS[:12]:
            pattern = parse_smarts(pattern_text)
            for smiles in SMALL_MOLECULES:
                mol = parse_smiles(smiles)
                assert has_match(pattern, mol) == bool(match(pattern, mol))


class TestTotality:
    def test_fuzz_patterns(self):
        rng = random.Random(777)
        alphabet = "CcNnOoSs[]()!&,;=#:~@*+-DHXRr0123456789$/\\>%aA"
        for _ in range(20_000):
            s = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 16)))
            try:
                parse_smarts(s)
            except SmartsError:
                pass
