"""Functional-group matcher and edit-verification tests."""

import pytest

from molbench.chem import parse_smiles
from molbench.common import EmptyInput
from molbench.groups import (
    ALL_GROUPS,
    COUNT_MISMATCH,
    INVALID_SMILES,
    OK,
    UNRELATED,
    EditInstruction,
    EditPolicy,
    Verdict,
    count_all,
    count_group,
    group_of,
    success_rate,
    verify_edit,
)


class TestMatchers:
    def test_registry_tags(self):
        assert {g.tag for g in ALL_GROUPS} == {
            "hydroxyl", "halo", "nitrile", "carboxyl", "amide", "amine",
            "ester", "ether", "ketone", "aldehyde", "nitro", "thiol",
            "sulfonyl", "benzene_ring",
        }

    def test_group_of_unknown_raises(self):
        with pytest.raises(Exception):
            group_of("phosphate")

    @pytest.mark.parametrize(
        "smiles,tag,n",
        [
            ("CCO", "hydroxyl", 1),
            ("OCCO", "hydroxyl", 2),
            ("CC(=O)O", "carboxyl", 1),
            ("CC(=O)O", "hydroxyl", 0),  # acid OH is not a free hydroxyl
            ("CC(=O)OC", "ester", 1),
            ("CC(=O)NC", "amide", 1),
            ("CC(=O)C", "ketone", 1),
            ("CC=O", "aldehyde", 1),
            ("CC#N", "nitrile", 1),
            ("CCN", "amine", 1),
            ("CC(=O)NC", "amine", 0),  # amide N is not an amine
            ("COC", "ether", 1),
            ("CC(=O)OC", "ether", 0),  # ester O is not an ether
            ("CS", "thiol", 1),
            ("CS(=O)(=O)C", "sulfonyl", 1),
            ("O=[N+]([O-])c1ccccc1", "nitro", 1),
            ("FC(F)(F)Cl", "halo", 4),
            ("c1ccccc1", "benzene_ring", 1),
            ("c1ccc2ccccc2c1", "benzene_ring", 2),
            ("c1ccncc1", "benzene_ring", 0),  # pyridine is not carbocyclic
            ("C1CCCCC1", "benzene_ring", 0),
        ],
    )
    def test_count_group_spots(self, smiles, tag, n):
        assert count_group(parse_smiles(smiles), tag) == n

    def test_count_all_aspirin(self):
        counts = count_all(parse_smiles("CC(=O)Oc1ccccc1C(=O)O"))
        assert {k: v for k, v in counts.items() if v} == {
            "carboxyl": 1,
            "ester": 1,
            "benzene_ring": 1,
        }
        assert set(counts) == {g.tag for g in ALL_GROUPS}


# (kind, group, source, correct answer, replacement)
EDIT_CASES = [
    (
        "add",
        "hydroxyl",
        "N#CC(=NNc1ccccc1)c1nc(-c2ccc3ccccc3c2)c(N=Nc2ccccc2)s1",
        "N#CC(=NNc1cccc(O)c1)c1nc(-c2ccc3ccccc3c2)c(N=Nc2ccccc2)s1",
        None,
    ),
    (
        "delete",
        "halo",
        "CC(C)Oc1cncc(NCc2c(C(F)(F)F)cnn2C)n1",
        "CC(C)Oc1cncc(NCc2c(C(F)F)cnn2C)n1",
        None,
    ),
    (
        "substitute",
        "nitrile",
        "COc1cccc2c(C)cc(SCC#N)nc12",
        "COc1cccc2c(C)cc(SCI)nc12",
        "halo",
    ),
]


def _instruction(kind, tag, source, replacement):
    return EditInstruction(
        kind=kind,
        group=group_of(tag),
        source=parse_smiles(source),
        replacement=group_of(replacement) if replacement else None,
    )


class TestVerifyEdit:
    @pytest.mark.parametrize("kind,tag,src,ans,repl", EDIT_CASES)
    def test_correct_answer_succeeds(self, kind, tag, src, ans, repl):
        verdict = verify_edit(_instruction(kind, tag, src, repl), ans)
        assert verdict.success
        assert verdict.reason == OK

    @pytest.mark.parametrize("kind,tag,src,ans,repl", EDIT_CASES)
    def test_unmodified_source_fails(self, kind, tag, src, ans, repl):
        verdict = verify_edit(_instruction(kind, tag, src, repl), src)
        assert not verdict.success
        assert verdict.reason == COUNT_MISMATCH

    def test_invalid_answer_is_a_verdict_not_an_exception(self):
        instr = _instruction("add", "hydroxyl", "CCO", None)
        verdict = verify_edit(instr, "C1CC")
        assert not verdict.success
        assert verdict.reason == INVALID_SMILES

    def test_unrelated_molecule_rejected(self):
        instr = _instruction(
            "add", "hydroxyl",
            "N#CC(=NNc1ccccc1)c1nc(-c2ccc3ccccc3c2)c(N=Nc2ccccc2)s1", None,
        )
        verdict = verify_edit(instr, "OCCO")
        assert not verdict.success
        assert verdict.reason == UNRELATED

    def test_similarity_floor_zero_disables_relatedness_check(self):
        instr = _instruction("add", "hydroxyl", "CCCCCCCCCCCCBr", None)
        policy = EditPolicy(similarity_floor=0.0)
        verdict = verify_edit(instr, "Oc1ccncc1", policy)
        assert verdict.reason != UNRELATED

    def test_wrong_delta_reports_counts(self):
        instr = _instruction("add", "hydroxyl", "CCO", None)
        verdict = verify_edit(instr, "OCC(O)CO")  # +2, not +1
        assert not verdict.success
        assert verdict.reason == COUNT_MISMATCH
        assert "hydroxyl" in verdict.detail

    def test_substitute_requires_both_deltas(self):
        instr = _instruction("substitute", "nitrile", "CCC#N", "halo")
        # nitrile removed but no halide added
        verdict = verify_edit(instr, "CCC")
        assert not verdict.success
        assert verdict.reason == COUNT_MISMATCH
        ok = verify_edit(instr, "CCCl")
        assert ok.success

    def test_strict_collateral_pins_other_groups(self):
        instr = _instruction("add", "halo", "CCOC(=O)c1ccccc1", None)
        loose = verify_edit(instr, "OCc1ccccc1Cl")  # ester destroyed
        assert loose.success
        strict = verify_edit(
            instr, "OCc1ccccc1Cl", EditPolicy(strict_collateral=True)
        )
        assert not strict.success
        assert strict.reason == COUNT_MISMATCH
        assert "collateral" in strict.detail
        kept = verify_edit(
            instr, "CCOC(=O)c1ccccc1Cl", EditPolicy(strict_collateral=True)
        )
        assert kept.success


class TestInstructionAndVerdict:
    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            EditInstruction(
                kind="mutate",
                group=group_of("halo"),
                source=parse_smiles("CC"),
            )

    def test_replacement_only_for_substitute(self):
        with pytest.raises(ValueError):
            EditInstruction(
                kind="add",
                group=group_of("halo"),
                source=parse_smiles("CC"),
                replacement=group_of("nitrile"),
            )
        with pytest.raises(ValueError):
            EditInstruction(
                kind="substitute",
                group=group_of("halo"),
                source=parse_smiles("CC"),
            )

    def test_success_requires_ok_reason(self):
        with pytest.raises(ValueError):
            Verdict(success=True, reason=COUNT_MISMATCH)

    def test_success_rate(self):
        vs = [
            Verdict(True, OK),
            Verdict(False, COUNT_MISMATCH),
            Verdict(True, OK),
            Verdict(False, INVALID_SMILES),
        ]
        assert success_rate(vs) == 0.5
        with pytest.raises(EmptyInput):
            success_rate([])
