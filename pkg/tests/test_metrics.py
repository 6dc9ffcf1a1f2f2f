"""Metric tests: extraction, molecule matching, text scores, reports."""

import math

import pytest

from molbench.metrics import (
    METRIC_NAMES,
    EmptyInput,
    EvalReport,
    ExtractedAnswer,
    GoldInvalid,
    MetricValue,
    NoAnswerFound,
    classification_accuracy,
    em_formula,
    em_iupac,
    em_smiles,
    extract_answer,
    fts,
    multi_opt_success,
    regression_rmse,
    text_metrics,
    tokenize,
    validity_rate,
)
from molbench.chem import parse_smiles


class TestExtract:
    def test_tagged_smiles_wins_over_fallback(self):
        text = "Maybe CCO, but the answer is <SMILES>c1ccccc1</SMILES>."
        ans = extract_answer(text, "smiles")
        assert ans.payload == "c1ccccc1"
        assert text[ans.source_span[0]:ans.source_span[1]] == "c1ccccc1"

    def test_think_block_never_contributes(self):
        text = "<think>the answer might be CCOCC</think>\nIt is CC"
        ans = extract_answer(text, "smiles")
        assert ans.payload == "CC"
        assert text[ans.source_span[0]:ans.source_span[1]] == "CC"

    def test_smiles_fallback_prefers_longest_parseable_token(self):
        ans = extract_answer("The product is CCO (from CC)", "smiles")
        assert ans.payload == "CCO"

    def test_smiles_fallback_strips_punctuation(self):
        ans = extract_answer("Answer: CCO.", "smiles")
        assert ans.payload == "CCO"

    def test_no_smiles_raises(self):
        with pytest.raises(NoAnswerFound):
            extract_answer("there is no molecule here", "smiles")

    def test_tagged_formula(self):
        text = "<MOLFORMULA>C23H30ClN3O</MOLFORMULA>"
        ans = extract_answer(text, "formula")
        assert ans.payload == "C23H30ClN3O"

    def test_formula_fallback_skips_bare_element(self):
        # one capital letter with no digit is too ambiguous untagged
        ans = extract_answer("A C atom gives C2H6O overall", "formula")
        assert ans.payload == "C2H6O"

    def test_formula_two_capitals_accepted(self):
        assert extract_answer("it is CO", "formula").payload == "CO"

    def test_number_first_signed_decimal(self):
        ans = extract_answer("logP is -1.25 at best", "number")
        assert ans.payload == -1.25

    def test_number_ignores_thinking(self):
        text = "<think>3.5? no.</think> final: 2.25"
        assert extract_answer(text, "number").payload == 2.25

    def test_yes_no_word_boundary(self):
        assert extract_answer("Yes, it does.", "yes_no").payload == "yes"
        assert extract_answer("No.", "yes_no").payload == "no"
        with pytest.raises(NoAnswerFound):
            extract_answer("yesterday was noisy", "yes_no")

    def test_free_text_strips_think(self):
        text = "<think>reasoning here</think>\nA clear caption."
        ans = extract_answer(text, "free_text")
        assert ans.payload == "A clear caption."

    def test_iupac_whole_text(self):
        ans = extract_answer("  2-methylpropan-1-ol ", "iupac")
        assert ans.payload == "2-methylpropan-1-ol"

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            extract_answer("x", "smarts")

    def test_empty_after_masking_raises(self):
        with pytest.raises(NoAnswerFound):
            extract_answer("<think>only thoughts</think>", "free_text")

    def test_nonfinite_number_payload_rejected(self):
        with pytest.raises(ValueError):
            ExtractedAnswer("number", float("nan"), (0, 1))


class TestMoleculeMatch:
    def test_em_smiles_rendering_invariant(self):
        assert em_smiles("OCC", "CCO")
        assert em_smiles("c1ccccc1", "C1=CC=CC=C1")
        assert not em_smiles("CCO", "CCN")

    def test_em_smiles_stereo_strictness(self):
        r = "N[C@@H](C)C(=O)O"
        s = "N[C@H](C)C(=O)O"
        assert not em_smiles(r, s)
        assert em_smiles(r, s, stereo_strict=False)

    def test_em_smiles_bad_pred_is_false(self):
        assert not em_smiles("C1CC", "CCO")

    def test_em_smiles_bad_gold_raises(self):
        with pytest.raises(GoldInvalid):
            em_smiles("CCO", "C1CC")

    def test_em_formula_multiset(self):
        assert em_formula("C2H6O", "H6C2O")
        assert not em_formula("C2H6O", "C2H6O2")
        assert not em_formula("garbage", "C2H6O")
        with pytest.raises(GoldInvalid):
            em_formula("C2H6O", "notaformula!")

    def test_em_iupac_part_set(self):
        assert em_iupac("Ethanol; Water", "water;  ethanol")
        assert em_iupac("ethanol", "Ethanol")
        assert not em_iupac("ethanol", "methanol")
        assert not em_iupac("ethanol", "ethanol; water")

    def test_fts_endpoints(self):
        assert fts("CCO", "OCC") == 1.0
        assert fts("C1CC", "CCO") == 0.0
        mid = fts("CCO", "CCCCCCCCBr")
        assert 0.0 < mid < 1.0
        with pytest.raises(GoldInvalid):
            fts("CCO", "C1CC")

    def test_validity_rate(self):
        assert validity_rate(["CCO", "C1CC", "c1ccccc1", ""]) == 0.5
        with pytest.raises(EmptyInput):
            validity_rate([])

    def test_regression_rmse_hand_case(self):
        # sqrt((1^2 + 2^2) / 2)
        assert regression_rmse([(1.0, 0.0), (3.0, 5.0)]) == pytest.approx(
            math.sqrt(2.5)
        )
        with pytest.raises(EmptyInput):
            regression_rmse([])

    def test_classification_accuracy(self):
        pairs = [("Yes", "yes"), ("no", "yes"), (None, "no"), ("no", "no")]
        assert classification_accuracy(pairs) == 0.5
        with pytest.raises(EmptyInput):
            classification_accuracy([])


class TestMultiOptSuccess:
    def test_joint_improvement_required(self):
        source = parse_smiles("CCO")
        instr = [("MW", "increase"), ("HBD", "decrease")]
        # heavier and no donor: satisfies both
        assert multi_opt_success(instr, source, ["CCCCCC"])
        # heavier but donor kept: subset only
        assert not multi_opt_success(instr, source, ["CCCCCCO"])
        # any one good candidate is enough
        assert multi_opt_success(instr, source, ["CCCCCCO", "CCCCCC"])

    def test_unparseable_candidates_skipped(self):
        source = parse_smiles("CCO")
        assert not multi_opt_success([("MW", "increase")], source, ["C1CC"])
        assert multi_opt_success(
            [("MW", "increase")], source, ["C1CC", "CCCO"]
        )

    def test_empty_candidates_raise(self):
        with pytest.raises(EmptyInput):
            multi_opt_success([("MW", "increase")], parse_smiles("CCO"), [])


class TestTextMetrics:
    def test_identical_scores_one_everywhere(self):
        got = text_metrics("red blue green", "red blue green")
        assert set(got) == set(METRIC_NAMES)
        assert all(v == 1.0 for v in got.values())

    def test_disjoint_scores_zero_everywhere(self):
        got = text_metrics("alpha beta", "gamma delta")
        assert all(v == 0.0 for v in got.values())

    def test_two_thirds_overlap_hand_values(self):
        got = text_metrics("red blue green", "red blue yellow")
        # unigram P = R = 2/3; bigram overlap 1 of 2
        assert got["ROUGE-1"] == pytest.approx(2 / 3, abs=1e-12)
        assert got["ROUGE-2"] == pytest.approx(1 / 2, abs=1e-12)
        assert got["ROUGE-L"] == pytest.approx(2 / 3, abs=1e-12)
        assert got["BLEU-2"] == pytest.approx(math.sqrt(1 / 3), abs=1e-9)
        # f_mean 2/3, one chunk of two matches: penalty 0.5 * (1/2)^3
        assert got["METEOR"] == pytest.approx(2 / 3 * (1 - 0.0625), abs=1e-12)

    def test_word_order_penalized_by_meteor_not_rouge1(self):
        got = text_metrics("blue red", "red blue")
        assert got["ROUGE-1"] == 1.0
        # two matches in two chunks: penalty 0.5 * (2/2)^3
        assert got["METEOR"] == pytest.approx(0.5, abs=1e-12)
        assert got["ROUGE-L"] == pytest.approx(0.5, abs=1e-12)

    def test_empty_sides_score_zero(self):
        assert all(v == 0.0 for v in text_metrics("", "words").values())
        assert all(v == 0.0 for v in text_metrics("words", "").values())

    def test_tokenize_casefolds_and_splits_punctuation(self):
        assert tokenize("The red, BLUE green!") == [
            "the", "red", ",", "blue", "green", "!",
        ]


class TestReport:
    def test_accounting_invariant(self):
        rep = EvalReport(task="demo")
        rep.scored = 7
        rep.add_failure("oracle_miss")
        rep.add_failure("oracle_miss")
        rep.add_failure("no_numeric_answer")
        assert rep.total == 10
        rep.check(10)
        with pytest.raises(ValueError):
            rep.check(11)

    def test_metric_value_needs_support(self):
        with pytest.raises(ValueError):
            MetricValue("EM", 0.5, 0)

    def test_to_dict_shape(self):
        rep = EvalReport(task="demo", scored=2)
        rep.values.append(MetricValue("EM", 0.5, 2))
        rep.add_failure("parse_error")
        d = rep.to_dict()
        assert d["task"] == "demo"
        assert d["total"] == 3
        assert d["metrics"] == [{"name": "EM", "value": 0.5, "support": 2}]
        assert d["failures"] == {"parse_error": 1}

    def test_render_formats_rates_and_raw_values(self):
        rep = EvalReport(task="demo", scored=4)
        rep.values.append(MetricValue("EM", 0.75, 4))
        rep.values.append(MetricValue("RMSE", 1.234, 4))
        text = rep.render()
        assert "75.0%" in text
        assert "1.234" in text
