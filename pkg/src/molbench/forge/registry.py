"""Task registry: every QA task the pipeline knows how to account for.

Each task carries its accounting rollup (category, subcategory), a display
name for rendered tables, the corpus it originates from, and a `kind` that
downstream evaluation uses to pick the right metric family.

Kinds:
    em_smiles      prediction is one molecule, scored by canonical equality
    em_formula     prediction is a molecular formula, multiset equality
    em_iupac       prediction is an IUPAC name, semicolon part-set equality
    caption        free text, scored by the six text metrics
    classification yes/no answer, accuracy
    regression     numeric answer, RMSE
    reaction       molecule answer scored by EM + FTS + validity
    generation     molecule answer scored by EM + FTS + validity
    edit           component edit, scored by verified success rate
    opt_single     single-property optimization success rate
    opt_multi      multi-property optimization success rate over n candidates
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TaskInfo:
    name: str
    display: str
    category: str
    subcategory: str
    source: str
    kind: str


_TASKS = [
    # Understanding: name conversion
    TaskInfo("i2s", "I2S", "Understanding", "Name Conversion",
             "SMolInstruct", "em_smiles"),
    TaskInfo("i2f", "I2F", "Understanding", "Name Conversion",
             "SMolInstruct", "em_formula"),
    TaskInfo("s2i", "S2I", "Understanding", "Name Conversion",
             "SMolInstruct", "em_iupac"),
    TaskInfo("s2f", "S2F", "Understanding", "Name Conversion",
             "SMolInstruct", "em_formula"),
    # Understanding: captioning
    TaskInfo("molecule_captioning", "Molecule Captioning", "Understanding",
             "Molecule Captioning", "SMolInstruct; L+M-24", "caption"),
    # Understanding: property prediction
    TaskInfo("clintox_cls", "ClinTox-cls", "Understanding",
             "Property Prediction", "SMolInstruct", "classification"),
    TaskInfo("bbbp_cls", "BBBP-cls", "Understanding",
             "Property Prediction", "SMolInstruct", "classification"),
    TaskInfo("hiv_cls", "HIV-cls", "Understanding",
             "Property Prediction", "SMolInstruct", "classification"),
    TaskInfo("sider_cls", "Sider-cls", "Understanding",
             "Property Prediction", "SMolInstruct", "classification"),
    TaskInfo("esol_reg", "ESOL-reg", "Understanding",
             "Property Prediction", "SMolInstruct", "regression"),
    TaskInfo("lipo_reg", "LIPO-reg", "Understanding",
             "Property Prediction", "SMolInstruct", "regression"),
    TaskInfo("plogp_reg", "plogP-reg", "Understanding",
             "Property Prediction", "MuMOInstruct (derived)", "regression"),
    TaskInfo("qed_reg", "QED-reg", "Understanding",
             "Property Prediction", "MuMOInstruct (derived)", "regression"),
    TaskInfo("bbbp_reg", "BBBP-reg", "Understanding",
             "Property Prediction", "MuMOInstruct (derived)", "regression"),
    TaskInfo("mutag_reg", "Mutag-reg", "Understanding",
             "Property Prediction", "MuMOInstruct (derived)", "regression"),
    TaskInfo("hia_reg", "HIA-reg", "Understanding",
             "Property Prediction", "MuMOInstruct (derived)", "regression"),
    # Generation: chemical reaction
    TaskInfo("forward_synthesis", "Forward Synthesis", "Generation",
             "Chemical Reaction", "SMolInstruct", "reaction"),
    TaskInfo("retrosynthesis", "Retrosynthesis", "Generation",
             "Chemical Reaction", "SMolInstruct", "reaction"),
    TaskInfo("reagent_prediction", "Reagent Prediction", "Generation",
             "Chemical Reaction", "Mol-Instructions", "reaction"),
    # Generation: molecule editing
    TaskInfo("description_guided_generation", "Description-guided Generation",
             "Generation", "Molecule Editing", "SMolInstruct", "generation"),
    TaskInfo("component_editing", "Molecule Component Editing", "Generation",
             "Molecule Editing", "OpenMolIns", "edit"),
    TaskInfo("add_component", "Add Component", "Generation",
             "Molecule Editing", "TOMG-Bench", "edit"),
    TaskInfo("delete_component", "Delete Component", "Generation",
             "Molecule Editing", "TOMG-Bench", "edit"),
    TaskInfo("substitute_component", "Substitute Component", "Generation",
             "Molecule Editing", "TOMG-Bench", "edit"),
    # Generation: property optimization
    TaskInfo("single_property_optimization", "Single Property Optimization",
             "Generation", "Property Optimization", "MolOpt-Instruct",
             "opt_single"),
    TaskInfo("logp_optimization", "logP Optimization", "Generation",
             "Property Optimization", "TOMG-Bench", "opt_single"),
    TaskInfo("qed_optimization", "QED Optimization", "Generation",
             "Property Optimization", "TOMG-Bench", "opt_single"),
    TaskInfo("mr_optimization", "MR Optimization", "Generation",
             "Property Optimization", "TOMG-Bench", "opt_single"),
    TaskInfo("multi_property_optimization", "Multi-property Optimization",
             "Generation", "Property Optimization", "MuMOInstruct",
             "opt_multi"),
    # Reasoning-trace data
    TaskInfo("cot_editing", "Molecular Editing", "CoT", "CoT",
             "ChemCoTDataset", "edit"),
    TaskInfo("cot_single_optimization", "Single Property Optimization",
             "CoT", "CoT", "ChemCoTDataset", "opt_single"),
]

TASKS: dict[str, TaskInfo] = {t.name: t for t in _TASKS}

CATEGORY_ORDER = ("Understanding", "Generation", "CoT")
SUBCATEGORY_ORDER = (
    "Name Conversion",
    "Molecule Captioning",
    "Property Prediction",
    "Chemical Reaction",
    "Molecule Editing",
    "Property Optimization",
    "CoT",
)


def task_info(name: str) -> TaskInfo:
    try:
        return TASKS[name]
    except KeyError:
        raise KeyError(f"unknown task: {name!r}") from None


__all__ = ["TaskInfo", "TASKS", "CATEGORY_ORDER", "SUBCATEGORY_ORDER",
           "task_info"]
