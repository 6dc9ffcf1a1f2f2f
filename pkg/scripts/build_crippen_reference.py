"""Build the frozen logP/MR reference set at tests/data/crippen_reference.json.

Every molecule below carries a hand-assigned atom-type multiset, worked out
per molecule from the published atom-contribution rules. The script is pure
data plus arithmetic: it never imports the package or parses SMILES, so the
expected values cannot be contaminated by the code they later judge. The
multiset also fixes the heavy-atom and hydrogen counts, which the test suite
cross-checks against the parsed molecule before comparing values.
"""

from __future__ import annotations

import json
import pathlib

# logP contribution per type, transcribed from the published table.
LOGP = {
    "C1": 0.1441, "C2": 0.0000, "C3": -0.2035, "C4": -0.2051,
    "C5": -0.2783, "C6": 0.1551, "C7": 0.0017, "C8": 0.08452,
    "C9": -0.1444, "C10": -0.0516, "C11": 0.1193, "C12": -0.0967,
    "C13": -0.5443, "C14": 0.0000, "C15": 0.2450, "C16": 0.1980,
    "C17": 0.0000, "C18": 0.1581, "C19": 0.2955, "C20": 0.2713,
    "C21": 0.1360, "C22": 0.4619, "C23": 0.5437, "C24": 0.1893,
    "C25": -0.8186, "C26": 0.2640, "C27": 0.2148, "CS": 0.08129,
    "H1": 0.1230, "H2": -0.2677, "H3": 0.2142, "H4": 0.2980,
    "HS": 0.1125,
    "N1": -1.0190, "N2": -0.7096, "N3": -1.0270, "N4": -0.5188,
    "N5": 0.08387, "N6": 0.1836, "N7": -0.3187, "N8": -0.4458,
    "N9": 0.01508, "N10": -1.950, "N11": -0.3239, "N12": -1.119,
    "N13": -0.3396, "N14": 0.2887, "NS": -0.4806,
    "O1": 0.1552, "O2": -0.2893, "O3": -0.0684, "O4": -0.4195,
    "O5": 0.0335, "O6": -0.3339, "O7": -1.189, "O8": 0.1788,
    "O9": -0.1526, "O10": 0.1129, "O11": 0.4833, "O12": -1.326,
    "OS": -0.1188,
    "F": 0.4202, "Cl": 0.6895, "Br": 0.8456, "I": 0.8857,
    "Hal": -2.996, "P": 0.8612,
    "S1": 0.6482, "S2": -0.0024, "S3": 0.6237,
}

# Molar refractivity contribution per type; types without a published MR
# value carry 0.
MR = {
    "C1": 2.503, "C2": 2.433, "C3": 2.753, "C4": 2.731,
    "C5": 5.007, "C6": 3.513, "C7": 3.888, "C8": 2.464,
    "C9": 2.412, "C10": 2.488, "C11": 2.582, "C12": 2.576,
    "C13": 4.041, "C14": 3.257, "C15": 3.564, "C16": 3.180,
    "C17": 3.104, "C18": 3.350, "C19": 4.346, "C20": 3.904,
    "C21": 3.509, "C22": 4.067, "C23": 3.853, "C24": 2.673,
    "C25": 3.135, "C26": 4.305, "C27": 2.693, "CS": 3.243,
    "H1": 1.057, "H2": 1.395, "H3": 0.9627, "H4": 1.805,
    "HS": 1.112,
    "N1": 2.262, "N2": 2.173, "N3": 2.827, "N4": 3.000,
    "N5": 1.757, "N6": 2.428, "N7": 1.839, "N8": 2.819,
    "N9": 1.725, "N10": 0.0, "N11": 2.202, "N12": 0.0,
    "N13": 0.2604, "N14": 3.359, "NS": 2.134,
    "O1": 1.080, "O2": 0.8238, "O3": 1.085, "O4": 1.182,
    "O5": 3.367, "O6": 0.7774, "O7": 0.000, "O8": 3.135,
    "O9": 0.000, "O10": 0.2215, "O11": 0.3890, "O12": 0.0,
    "OS": 0.6865,
    "F": 1.108, "Cl": 5.853, "Br": 8.927, "I": 14.02,
    "Hal": 0.0, "P": 6.920,
    "S1": 7.591, "S2": 7.365, "S3": 6.691,
}

H_TYPES = {"H1", "H2", "H3", "H4", "HS"}

# name, SMILES, hand-assigned type multiset (hydrogens included).
ENTRIES: list[tuple[str, str, dict[str, int]]] = [
    # --- alkanes and cycloalkanes ---
    ("methane", "C", {"C1": 1, "H1": 4}),
    ("ethane", "CC", {"C1": 2, "H1": 6}),
    ("propane", "CCC", {"C1": 3, "H1": 8}),
    ("butane", "CCCC", {"C1": 4, "H1": 10}),
    ("pentane", "CCCCC", {"C1": 5, "H1": 12}),
    ("hexane", "CCCCCC", {"C1": 6, "H1": 14}),
    ("octane", "CCCCCCCC", {"C1": 8, "H1": 18}),
    ("isobutane", "CC(C)C", {"C1": 3, "C2": 1, "H1": 10}),
    ("neopentane", "CC(C)(C)C", {"C1": 4, "C2": 1, "H1": 12}),
    ("2-methylbutane", "CCC(C)C", {"C1": 4, "C2": 1, "H1": 12}),
    ("2,3-dimethylbutane", "CC(C)C(C)C", {"C1": 4, "C2": 2, "H1": 14}),
    ("cyclopropane", "C1CC1", {"C1": 3, "H1": 6}),
    ("cyclopentane", "C1CCCC1", {"C1": 5, "H1": 10}),
    ("cyclohexane", "C1CCCCC1", {"C1": 6, "H1": 12}),
    ("methylcyclohexane", "CC1CCCCC1", {"C1": 6, "C2": 1, "H1": 14}),
    # --- benzene and friends ---
    ("benzene", "c1ccccc1", {"C18": 6, "H1": 6}),
    ("toluene", "Cc1ccccc1", {"C18": 5, "C21": 1, "C8": 1, "H1": 8}),
    ("ethylbenzene", "CCc1ccccc1",
     {"C18": 5, "C21": 1, "C10": 1, "C1": 1, "H1": 10}),
    ("p-xylene", "Cc1ccc(C)cc1", {"C18": 4, "C21": 2, "C8": 2, "H1": 10}),
    ("m-xylene", "Cc1cccc(C)c1", {"C18": 4, "C21": 2, "C8": 2, "H1": 10}),
    ("o-xylene", "Cc1ccccc1C", {"C18": 4, "C21": 2, "C8": 2, "H1": 10}),
    ("mesitylene", "Cc1cc(C)cc(C)c1",
     {"C18": 3, "C21": 3, "C8": 3, "H1": 12}),
    ("naphthalene", "c1ccc2ccccc2c1", {"C18": 8, "C19": 2, "H1": 8}),
    ("anthracene", "c1ccc2cc3ccccc3cc2c1", {"C18": 10, "C19": 4, "H1": 10}),
    ("biphenyl", "c1ccc(-c2ccccc2)cc1", {"C18": 10, "C20": 2, "H1": 10}),
    ("styrene", "C=Cc1ccccc1",
     {"C18": 5, "C21": 1, "C26": 1, "C6": 1, "H1": 8}),
    # --- alcohols and phenols ---
    ("methanol", "CO", {"C3": 1, "O2": 1, "H1": 3, "H2": 1}),
    ("ethanol", "CCO", {"C1": 1, "C3": 1, "O2": 1, "H1": 5, "H2": 1}),
    ("1-propanol", "CCCO", {"C1": 2, "C3": 1, "O2": 1, "H1": 7, "H2": 1}),
    ("2-propanol", "CC(O)C", {"C1": 2, "C4": 1, "O2": 1, "H1": 7, "H2": 1}),
    ("1-butanol", "CCCCO", {"C1": 3, "C3": 1, "O2": 1, "H1": 9, "H2": 1}),
    ("tert-butanol", "CC(C)(C)O",
     {"C1": 3, "C4": 1, "O2": 1, "H1": 9, "H2": 1}),
    ("cyclohexanol", "OC1CCCCC1",
     {"C1": 5, "C4": 1, "O2": 1, "H1": 11, "H2": 1}),
    ("benzyl alcohol", "OCc1ccccc1",
     {"C18": 5, "C21": 1, "C3": 1, "O2": 1, "H1": 7, "H2": 1}),
    ("2-phenylethanol", "OCCc1ccccc1",
     {"C18": 5, "C21": 1, "C10": 1, "C3": 1, "O2": 1, "H1": 9, "H2": 1}),
    ("phenol", "Oc1ccccc1", {"C18": 5, "C23": 1, "O2": 1, "H1": 5, "H2": 1}),
    ("p-cresol", "Cc1ccc(O)cc1",
     {"C18": 4, "C23": 1, "C21": 1, "C8": 1, "O2": 1, "H1": 7, "H2": 1}),
    ("4-chlorophenol", "Oc1ccc(Cl)cc1",
     {"C18": 4, "C23": 1, "C15": 1, "O2": 1, "Cl": 1, "H1": 4, "H2": 1}),
    ("1-naphthol", "Oc1cccc2ccccc12",
     {"C18": 7, "C19": 2, "C23": 1, "O2": 1, "H1": 7, "H2": 1}),
    ("ethylene glycol", "OCCO", {"C3": 2, "O2": 2, "H1": 4, "H2": 2}),
    ("glycerol", "OCC(O)CO",
     {"C3": 2, "C4": 1, "O2": 3, "H1": 5, "H2": 3}),
    # --- ethers ---
    ("dimethyl ether", "COC", {"C3": 2, "O3": 1, "H1": 6}),
    ("diethyl ether", "CCOCC", {"C1": 2, "C3": 2, "O3": 1, "H1": 10}),
    ("tetrahydrofuran", "C1CCOC1", {"C1": 2, "C3": 2, "O3": 1, "H1": 8}),
    ("1,4-dioxane", "C1COCCO1", {"C3": 4, "O3": 2, "H1": 8}),
    ("methyl tert-butyl ether", "COC(C)(C)C",
     {"C1": 3, "C3": 1, "C4": 1, "O3": 1, "H1": 12}),
    ("anisole", "COc1ccccc1",
     {"C18": 5, "C23": 1, "C3": 1, "O4": 1, "H1": 8}),
    ("phenetole", "CCOc1ccccc1",
     {"C18": 5, "C23": 1, "C3": 1, "C1": 1, "O4": 1, "H1": 10}),
    ("4-methylanisole", "COc1ccc(C)cc1",
     {"C18": 4, "C23": 1, "C21": 1, "C8": 1, "C3": 1, "O4": 1, "H1": 10}),
    ("diphenyl ether", "c1ccc(Oc2ccccc2)cc1",
     {"C18": 10, "C23": 2, "O4": 1, "H1": 10}),
    # --- amines and azaarenes ---
    ("methylamine", "CN", {"C3": 1, "N1": 1, "H1": 3, "H3": 2}),
    ("ethylamine", "CCN", {"C1": 1, "C3": 1, "N1": 1, "H1": 5, "H3": 2}),
    ("dimethylamine", "CNC", {"C3": 2, "N2": 1, "H1": 6, "H3": 1}),
    ("trimethylamine", "CN(C)C", {"C3": 3, "N7": 1, "H1": 9}),
    ("diethylamine", "CCNCC", {"C1": 2, "C3": 2, "N2": 1, "H1": 10, "H3": 1}),
    ("triethylamine", "CCN(CC)CC", {"C1": 3, "C3": 3, "N7": 1, "H1": 15}),
    ("cyclohexylamine", "NC1CCCCC1",
     {"C1": 5, "C4": 1, "N1": 1, "H1": 11, "H3": 2}),
    ("benzylamine", "NCc1ccccc1",
     {"C18": 5, "C21": 1, "C3": 1, "N1": 1, "H1": 7, "H3": 2}),
    ("aniline", "Nc1ccccc1", {"C18": 5, "C22": 1, "N3": 1, "H1": 5, "H3": 2}),
    ("p-toluidine", "Cc1ccc(N)cc1",
     {"C18": 4, "C22": 1, "C21": 1, "C8": 1, "N3": 1, "H1": 7, "H3": 2}),
    ("N-methylaniline", "CNc1ccccc1",
     {"C18": 5, "C22": 1, "C3": 1, "N4": 1, "H1": 8, "H3": 1}),
    ("N,N-dimethylaniline", "CN(C)c1ccccc1",
     {"C18": 5, "C22": 1, "C3": 2, "N8": 1, "H1": 11}),
    ("piperidine", "C1CCNCC1", {"C1": 3, "C3": 2, "N2": 1, "H1": 10, "H3": 1}),
    ("morpholine", "C1COCCN1", {"C3": 4, "O3": 1, "N2": 1, "H1": 8, "H3": 1}),
    ("pyridine", "c1ccncc1", {"C18": 5, "N11": 1, "H1": 5}),
    ("pyrimidine", "c1cncnc1", {"C18": 4, "N11": 2, "H1": 4}),
    ("pyrazine", "c1cnccn1", {"C18": 4, "N11": 2, "H1": 4}),
    ("quinoline", "c1ccc2ncccc2c1", {"C18": 7, "C19": 2, "N11": 1, "H1": 7}),
    # --- halides ---
    ("chloromethane", "CCl", {"C3": 1, "Cl": 1, "H1": 3}),
    ("dichloromethane", "ClCCl", {"C3": 1, "Cl": 2, "H1": 2}),
    ("chloroform", "ClC(Cl)Cl", {"C4": 1, "Cl": 3, "H1": 1}),
    ("carbon tetrachloride", "ClC(Cl)(Cl)Cl", {"C4": 1, "Cl": 4}),
    ("fluoromethane", "CF", {"C3": 1, "F": 1, "H1": 3}),
    ("1-chlorobutane", "CCCCCl", {"C1": 3, "C3": 1, "Cl": 1, "H1": 9}),
    ("2-chloropropane", "CC(Cl)C", {"C1": 2, "C4": 1, "Cl": 1, "H1": 7}),
    ("1,1,1-trichloroethane", "CC(Cl)(Cl)Cl",
     {"C1": 1, "C4": 1, "Cl": 3, "H1": 3}),
    ("chlorobenzene", "Clc1ccccc1", {"C18": 5, "C15": 1, "Cl": 1, "H1": 5}),
    ("fluorobenzene", "Fc1ccccc1", {"C18": 5, "C14": 1, "F": 1, "H1": 5}),
    ("bromobenzene", "Brc1ccccc1", {"C18": 5, "C16": 1, "Br": 1, "H1": 5}),
    ("iodobenzene", "Ic1ccccc1", {"C18": 5, "C17": 1, "I": 1, "H1": 5}),
    ("p-dichlorobenzene", "Clc1ccc(Cl)cc1",
     {"C18": 4, "C15": 2, "Cl": 2, "H1": 4}),
    ("4-chlorotoluene", "Cc1ccc(Cl)cc1",
     {"C18": 4, "C15": 1, "C21": 1, "C8": 1, "Cl": 1, "H1": 7}),
    ("4-bromotoluene", "Cc1ccc(Br)cc1",
     {"C18": 4, "C16": 1, "C21": 1, "C8": 1, "Br": 1, "H1": 7}),
    ("benzyl chloride", "ClCc1ccccc1",
     {"C18": 5, "C21": 1, "C3": 1, "Cl": 1, "H1": 7}),
    ("trifluorotoluene", "FC(F)(F)c1ccccc1",
     {"C18": 5, "C21": 1, "C4": 1, "F": 3, "H1": 5}),
    # --- carbonyls ---
    ("formaldehyde", "C=O", {"C5": 1, "O9": 1, "H1": 2}),
    ("acetaldehyde", "CC=O", {"C1": 1, "C5": 1, "O9": 1, "H1": 4}),
    ("acetone", "CC(=O)C", {"C1": 2, "C5": 1, "O9": 1, "H1": 6}),
    ("2-butanone", "CCC(C)=O", {"C1": 3, "C5": 1, "O9": 1, "H1": 8}),
    ("cyclohexanone", "O=C1CCCCC1", {"C1": 5, "C5": 1, "O9": 1, "H1": 10}),
    ("benzaldehyde", "O=Cc1ccccc1",
     {"C18": 5, "C21": 1, "C5": 1, "O10": 1, "H1": 6}),
    ("acetophenone", "CC(=O)c1ccccc1",
     {"C18": 5, "C21": 1, "C5": 1, "C1": 1, "O10": 1, "H1": 8}),
    ("benzophenone", "O=C(c1ccccc1)c1ccccc1",
     {"C18": 10, "C21": 2, "C5": 1, "O10": 1, "H1": 10}),
    ("acetic acid", "CC(=O)O",
     {"C1": 1, "C5": 1, "O9": 1, "O2": 1, "H1": 3, "H4": 1}),
    ("propionic acid", "CCC(=O)O",
     {"C1": 2, "C5": 1, "O9": 1, "O2": 1, "H1": 5, "H4": 1}),
    ("benzoic acid", "O=C(O)c1ccccc1",
     {"C18": 5, "C21": 1, "C5": 1, "O10": 1, "O2": 1, "H1": 5, "H4": 1}),
    ("methyl acetate", "COC(C)=O",
     {"C1": 1, "C3": 1, "C5": 1, "O9": 1, "O3": 1, "H1": 6}),
    ("ethyl acetate", "CCOC(C)=O",
     {"C1": 2, "C3": 1, "C5": 1, "O9": 1, "O3": 1, "H1": 8}),
    ("methyl benzoate", "COC(=O)c1ccccc1",
     {"C18": 5, "C21": 1, "C5": 1, "C3": 1, "O10": 1, "O3": 1, "H1": 8}),
    ("acetonitrile", "CC#N", {"C1": 1, "C7": 1, "N9": 1, "H1": 3}),
    ("benzonitrile", "N#Cc1ccccc1",
     {"C18": 5, "C21": 1, "C7": 1, "N9": 1, "H1": 5}),
    # --- sulfur ---
    ("dimethyl sulfide", "CSC", {"C3": 2, "S1": 1, "H1": 6}),
    ("thioanisole", "CSc1ccccc1",
     {"C18": 5, "C24": 1, "C3": 1, "S1": 1, "H1": 8}),
    ("thiophene", "c1ccsc1", {"C18": 4, "S3": 1, "H1": 4}),
]


def sums(types: dict[str, int]) -> tuple[float, float, int, int]:
    logp = sum(n * LOGP[t] for t, n in types.items())
    mr = sum(n * MR[t] for t, n in types.items())
    hydrogens = sum(n for t, n in types.items() if t in H_TYPES)
    heavy = sum(n for t, n in types.items() if t not in H_TYPES)
    return logp, mr, heavy, hydrogens


def main() -> None:
    seen = set()
    out = []
    for name, smiles, types in ENTRIES:
        if smiles in seen:
            raise SystemExit(f"duplicate entry: {smiles}")
        seen.add(smiles)
        for t in types:
            if t not in LOGP or t not in MR:
                raise SystemExit(f"{name}: unknown type {t}")
        logp, mr, heavy, hydrogens = sums(types)
        out.append({
            "name": name,
            "smiles": smiles,
            "types": dict(sorted(types.items())),
            "heavy_atoms": heavy,
            "hydrogens": hydrogens,
            "logp": round(logp, 6),
            "mr": round(mr, 6),
        })
    if len(out) < 100:
        raise SystemExit(f"curated set has only {len(out)} molecules")

    anchors = {"benzene": 1.6866, "ethanol": -0.0014, "toluene": 1.9950}
    by_name = {m["name"]: m for m in out}
    for name, want in anchors.items():
        got = by_name[name]["logp"]
        if abs(got - want) > 5e-4:
            raise SystemExit(f"anchor {name}: {got} != {want}")

    path = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"
    path.mkdir(parents=True, exist_ok=True)
    target = path / "crippen_reference.json"
    target.write_text(json.dumps({"molecules": out}, indent=1) + "\n")
    print(f"wrote {target}: {len(out)} molecules")


if __name__ == "__main__":
    main()
