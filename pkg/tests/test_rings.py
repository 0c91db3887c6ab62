"""Ring perception and kekulization tests."""

import pytest

from chemagent.molkit import BondOrder, KekulizeError, kekulize, parse_smiles, perceive_rings


class TestRingPerception:
    @pytest.mark.parametrize(
        "smiles,sizes",
        [
            ("CCO", []),
            ("c1ccccc1", [6]),
            ("C1CC1C1CC1", [3, 3]),
            ("c1ccc2ccccc2c1", [6, 6]),
            ("C1CCC2CCCCC2C1", [6, 6]),
            ("C1CC2CCC1C2", [5, 5]),                  # norbornane
            ("C1CCC2(CC1)CCCC2", [5, 6]),             # spiro[4.5]decane
            ("C1C2CC3CC1CC(C2)C3", [6, 6, 6]),        # adamantane
            ("C1CCCCCCCCCCC1", [12]),
            ("c1ccc2c(c1)cccn2", [6, 6]),             # quinoline
        ],
    )
    def test_ring_sizes(self, smiles, sizes):
        info = parse_smiles(smiles).rings
        assert sorted(len(r) for r in info.rings) == sizes

    def test_cycle_count_formula(self, corpus):
        for smiles in corpus:
            m = parse_smiles(smiles)
            expected = len(m.bonds) - len(m.atoms) + len(m.components())
            assert len(m.rings.rings) == expected, smiles

    def test_rings_are_simple_cycles(self, corpus):
        for smiles in corpus:
            m = parse_smiles(smiles)
            for ring in m.rings.rings:
                assert len(set(ring)) == len(ring) >= 3
                for k in range(len(ring)):
                    assert m.bond_between(ring[k], ring[(k + 1) % len(ring)]) is not None

    def test_membership_consistency(self, corpus):
        # sum of per-atom membership equals sum of ring sizes
        for smiles in corpus:
            info = parse_smiles(smiles).rings
            assert sum(info.atom_ring_membership) == sum(len(r) for r in info.rings), smiles

    def test_smallest_ring(self):
        info = parse_smiles("C1CCC2(CC1)CCCC2").rings
        spiro_atom = max(range(10), key=lambda i: info.atom_ring_membership[i])
        assert info.atom_ring_membership[spiro_atom] == 2
        assert info.atom_smallest_ring[spiro_atom] == 5

    def test_acyclic_has_no_smallest(self):
        info = parse_smiles("CCO").rings
        assert info.atom_smallest_ring == (None, None, None)

    def test_deterministic_across_spellings(self):
        a = parse_smiles("C1CCCCC1").rings
        b = parse_smiles("C2CCCCC2").rings
        assert a.rings == b.rings

    def test_perceive_rings_function(self):
        m = parse_smiles("c1ccccc1")
        assert perceive_rings(m).rings == m.rings.rings


class TestKekulize:
    def test_benzene_alternation(self):
        k = kekulize(parse_smiles("c1ccccc1"))
        orders = sorted(b.order.name for b in k.bonds)
        assert orders == ["DOUBLE"] * 3 + ["SINGLE"] * 3
        assert not any(a.aromatic for a in k.atoms)

    def test_nothing_aromatic_unchanged(self):
        m = parse_smiles("CCO")
        assert kekulize(m) is m

    def test_pyridine_nitrogen_in_one_double(self):
        m = parse_smiles("c1ccncc1")
        k = kekulize(m)
        n_index = next(i for i, a in enumerate(m.atoms) if a.symbol == "N")
        doubles = [b for b in k.bonds_of(n_index) if b.order is BondOrder.DOUBLE]
        assert len(doubles) == 1

    def test_pyrrole_nitrogen_no_double(self):
        m = parse_smiles("c1cc[nH]c1")
        k = kekulize(m)
        n_index = next(i for i, a in enumerate(m.atoms) if a.symbol == "N")
        assert all(b.order is BondOrder.SINGLE for b in k.bonds_of(n_index))

    def test_pyridinium_nitrogen_has_double(self):
        m = parse_smiles("[nH+]1ccccc1")
        k = kekulize(m)
        doubles = [b for b in k.bonds_of(0) if b.order is BondOrder.DOUBLE]
        assert len(doubles) == 1

    def test_exocyclic_carbonyl_carbon_gets_no_ring_double(self):
        # pyridinone-style aromatic carbon with an exocyclic C=O
        m = parse_smiles("O=c1cc[nH]c(=O)[nH]1")
        k = kekulize(m)
        for i, a in enumerate(m.atoms):
            if a.symbol == "C" and any(
                b.order is BondOrder.DOUBLE and m.atoms[b.other(i)].symbol == "O"
                for b in m.bonds_of(i)
            ):
                ring_doubles = [
                    b for b in k.bonds_of(i)
                    if b.order is BondOrder.DOUBLE and k.atoms[b.other(i)].symbol != "O"
                ]
                assert ring_doubles == []

    def test_hydrogen_conservation(self, corpus):
        for smiles in corpus:
            m = parse_smiles(smiles)
            try:
                k = kekulize(m)
            except KekulizeError:
                pytest.fail(f"kekulize failed on corpus molecule {smiles!r}")
            assert m.total_hydrogens() == k.total_hydrogens(), smiles

    def test_no_aromatic_bonds_left(self, corpus):
        for smiles in corpus:
            k = kekulize(parse_smiles(smiles))
            assert not any(b.order is BondOrder.AROMATIC for b in k.bonds), smiles

    def test_failure_reports_ring_system(self):
        # cyclopentadienyl written aromatic without the anion charge:
        # five carbons all demand a double bond, which cannot pair up
        with pytest.raises(KekulizeError) as exc:
            kekulize(parse_smiles("c1cccc1"))
        assert exc.value.atoms == (0, 1, 2, 3, 4)

    def test_charged_cyclopentadienyl_succeeds(self):
        k = kekulize(parse_smiles("[cH-]1cccc1"))
        doubles = [b for b in k.bonds if b.order is BondOrder.DOUBLE]
        assert len(doubles) == 2
