"""Property oracle tests: descriptors, Crippen contributions, QED, bindings."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from molbench.chem import canonical_smiles, parse_smiles, write_random
from molbench.props import (
    BBBP,
    HIA,
    KINDS,
    LOGP,
    MUTAG,
    PLOGP,
    QED,
    OracleBinding,
    OracleMiss,
    OracleRegistry,
    PropertyError,
    UnboundOracle,
    aromatic_ring_count,
    compare_property,
    compute_property,
    crippen_contributions,
    h_bond_acceptors,
    h_bond_donors,
    is_builtin,
    kind_of,
    molecular_weight,
    qed,
    qed_descriptors,
    rotatable_bonds,
    structural_alerts,
    tpsa,
)

from conftest import DATA_DIR
from genmol import random_smiles


class TestDescriptors:
    def test_molecular_weight_hand_sums(self):
        # 2*12.011 + 6*1.008 + 15.999 and 8*12.011 + 18*1.008
        assert molecular_weight(parse_smiles("CCO")) == pytest.approx(
            46.069, abs=1e-3
        )
        assert molecular_weight(parse_smiles("CCCCCCCC")) == pytest.approx(
            114.232, abs=1e-3
        )

    def test_h_bond_counts(self):
        ethanol = parse_smiles("CCO")
        assert h_bond_donors(ethanol) == 1
        assert h_bond_acceptors(ethanol) == 1
        octane = parse_smiles("CCCCCCCC")
        assert h_bond_donors(octane) == 0
        assert h_bond_acceptors(octane) == 0
        aspirin = parse_smiles("CC(=O)Oc1ccccc1C(=O)O")
        assert h_bond_donors(aspirin) == 1
        assert h_bond_acceptors(aspirin) == 4

    def test_rotatable_bonds(self):
        # internal single bonds between heavy atoms, terminal ones excluded
        assert rotatable_bonds(parse_smiles("CCCCCCCC")) == 5
        assert rotatable_bonds(parse_smiles("CCO")) == 0
        assert rotatable_bonds(parse_smiles("c1ccccc1")) == 0

    def test_aromatic_ring_count(self):
        assert aromatic_ring_count(parse_smiles("c1ccccc1")) == 1
        assert aromatic_ring_count(parse_smiles("c1ccc2ccccc2c1")) == 2
        assert aromatic_ring_count(parse_smiles("C1CCCCC1")) == 0

    def test_tpsa_published_anchors(self):
        # PubChem topological polar surface areas
        assert tpsa(parse_smiles("CCO")) == pytest.approx(20.23, abs=1e-2)
        assert tpsa(parse_smiles("CC(=O)Oc1ccccc1C(=O)O")) == pytest.approx(
            63.60, abs=1e-2
        )
        assert tpsa(parse_smiles("CCCCCCCC")) == 0.0


class TestCrippen:
    def test_hand_summed_anchors(self):
        # benzene: 6*C18 + 6*H1; ethanol: C1 + C3 + O2 + 5*H1 + H2
        benzene = crippen_contributions(parse_smiles("c1ccccc1"))
        assert benzene.logp == pytest.approx(1.6866, abs=5e-4)
        assert benzene.mr == pytest.approx(26.442, abs=5e-3)
        ethanol = crippen_contributions(parse_smiles("CCO"))
        assert ethanol.logp == pytest.approx(-0.0014, abs=5e-4)
        toluene = crippen_contributions(parse_smiles("Cc1ccccc1"))
        assert toluene.logp == pytest.approx(1.9950, abs=5e-4)

    def test_all_atoms_typed_on_common_drugs(self):
        for s in (
            "CC(=O)Oc1ccccc1C(=O)O",
            "CN1C=NC2=C1C(=O)N(C)C(=O)N2C",
            "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
        ):
            res = crippen_contributions(parse_smiles(s))
            assert res.unmatched == 0
            assert len(res.types) > 0

    def test_frozen_reference_spot_rows(self):
        rows = json.loads(
            (DATA_DIR / "crippen_reference.json").read_text()
        )["molecules"]
        assert len(rows) >= 100
        by_name = {r["name"]: r for r in rows}
        for name in ("benzene", "ethanol", "toluene", "acetone"):
            row = by_name[name]
            res = crippen_contributions(parse_smiles(row["smiles"]))
            assert res.logp == pytest.approx(row["logp"], abs=1e-6)
            assert res.mr == pytest.approx(row["mr"], abs=1e-6)
            got = {}
            for t in res.types:
                got[t] = got.get(t, 0) + 1
            assert got == row["types"]


class TestQed:
    def test_bounds_and_regression_pins(self):
        # pins for the reduced-alert-catalog parameterization
        assert qed(parse_smiles("CCO")) == pytest.approx(0.407, abs=1e-3)
        assert qed(parse_smiles("CCCCCCCC")) == pytest.approx(0.514, abs=1e-3)
        for s in ("C", "c1ccccc1", "CC(=O)Oc1ccccc1C(=O)O"):
            v = qed(parse_smiles(s))
            assert 0.0 < v <= 1.0

    def test_descriptor_vector_shape(self):
        d = qed_descriptors(parse_smiles("CC(=O)Oc1ccccc1C(=O)O"))
        assert set(d) == {
            "MW", "ALOGP", "HBA", "HBD", "PSA", "ROTB", "AROM", "ALERTS",
        }
        assert d["HBA"] == 4.0
        assert d["HBD"] == 1.0
        assert d["AROM"] == 1.0

    def test_structural_alerts_fire(self):
        assert structural_alerts(parse_smiles("CC(=O)Oc1ccccc1C(=O)O")) == 0
        # nitro and acyl halide are both in the catalog
        assert structural_alerts(parse_smiles("O=[N+]([O-])c1ccccc1")) >= 1
        assert structural_alerts(parse_smiles("CC(=O)Cl")) >= 1


class TestKinds:
    def test_kind_of_known_tags(self):
        assert kind_of("logP") is LOGP
        assert kind_of("QED") is QED
        assert kind_of("plogP") is PLOGP
        assert set(KINDS) == {
            "logP", "MR", "MW", "QED", "HBD", "HBA", "RotB",
            "plogP", "BBBP", "Mutag", "HIA",
        }

    def test_kind_of_unknown_raises(self):
        with pytest.raises(PropertyError):
            kind_of("boiling_point")

    def test_direction_sensitivity_split(self):
        for k in (BBBP, MUTAG, HIA):
            assert not k.direction_sensitive
        assert LOGP.direction_sensitive
        assert QED.direction_sensitive

    def test_builtin_partition(self):
        assert is_builtin(LOGP)
        assert is_builtin(QED)
        assert not is_builtin(PLOGP)
        assert not is_builtin(BBBP)


class TestRegistry:
    def _table_binding(self, tmp_path, kind=PLOGP, rows=None):
        if rows is None:
            rows = {canonical_smiles("CCO"): 0.25}
        path = tmp_path / f"{kind.tag}.tsv"
        lines = ["# canonical smiles -> value"]
        lines += [f"{k}\t{v}" for k, v in rows.items()]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return OracleBinding(kind=kind, source=path)

    def test_bind_and_lookup(self, tmp_path):
        reg = OracleRegistry()
        reg.bind(self._table_binding(tmp_path))
        mol = parse_smiles("OCC")
        assert compute_property(mol, PLOGP, reg) == pytest.approx(0.25)

    def test_lookup_uses_canonical_key(self, tmp_path):
        # any rendering of the bound molecule resolves to the same row
        reg = OracleRegistry()
        reg.bind(self._table_binding(tmp_path))
        rng = random.Random("props:render")
        mol = parse_smiles("CCO")
        for _ in range(5):
            again = parse_smiles(write_random(mol, rng))
            assert compute_property(again, PLOGP, reg) == pytest.approx(0.25)

    def test_miss_raises(self, tmp_path):
        reg = OracleRegistry()
        reg.bind(self._table_binding(tmp_path))
        with pytest.raises(OracleMiss):
            compute_property(parse_smiles("CCCC"), PLOGP, reg)

    def test_unbound_raises(self):
        reg = OracleRegistry()
        with pytest.raises(UnboundOracle):
            compute_property(parse_smiles("CCO"), PLOGP, reg)

    def test_builtin_binding_rejected(self, tmp_path):
        reg = OracleRegistry()
        with pytest.raises(PropertyError):
            reg.bind(self._table_binding(tmp_path, kind=LOGP))

    def test_malformed_row_rejected_at_bind(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("CCO 0.25\n", encoding="utf-8")
        reg = OracleRegistry()
        with pytest.raises(PropertyError):
            reg.bind(OracleBinding(kind=PLOGP, source=path))

    def test_callable_source(self):
        reg = OracleRegistry()
        table = {canonical_smiles("CCO"): 1.5}
        reg.bind(OracleBinding(kind=BBBP, source=lambda s: table[s]))
        assert compute_property(parse_smiles("CCO"), BBBP, reg) == 1.5
        with pytest.raises(OracleMiss):
            compute_property(parse_smiles("CCCC"), BBBP, reg)

    def test_unbind(self, tmp_path):
        reg = OracleRegistry()
        reg.bind(self._table_binding(tmp_path))
        reg.unbind(PLOGP)
        with pytest.raises(UnboundOracle):
            compute_property(parse_smiles("CCO"), PLOGP, reg)

    def test_builtin_ignores_registry(self):
        assert compute_property(parse_smiles("CCO"), "HBD") == 1.0
        assert compute_property(parse_smiles("CCO"), "logP") == pytest.approx(
            -0.0014, abs=5e-4
        )


class TestCompare:
    def test_strict_direction(self):
        small = parse_smiles("CCO")
        big = parse_smiles("CCCCCCCCO")
        assert compare_property(small, big, "MW", "increase")
        assert not compare_property(small, big, "MW", "decrease")
        assert compare_property(big, small, "MW", "decrease")

    def test_equal_value_fails_both_ways(self):
        a = parse_smiles("CCO")
        b = parse_smiles("OCC")
        assert not compare_property(a, b, "MW", "increase")
        assert not compare_property(a, b, "MW", "decrease")

    def test_bad_direction_raises(self):
        a = parse_smiles("CCO")
        with pytest.raises(PropertyError):
            compare_property(a, a, "MW", "same")


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_descriptors_invariant_under_rerendering(seed):
    mol = parse_smiles(random_smiles(seed, max_atoms=16))
    rng = random.Random(f"props:fuzz:{seed}")
    again = parse_smiles(write_random(mol, rng))
    assert molecular_weight(again) == pytest.approx(molecular_weight(mol))
    assert h_bond_donors(again) == h_bond_donors(mol)
    assert h_bond_acceptors(again) == h_bond_acceptors(mol)
    assert rotatable_bonds(again) == rotatable_bonds(mol)
    ours, theirs = crippen_contributions(mol), crippen_contributions(again)
    assert theirs.logp == pytest.approx(ours.logp)
    assert theirs.mr == pytest.approx(ours.mr)
