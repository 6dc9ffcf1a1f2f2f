"""Build the canonicalization agreement corpus.

Produces tests/data/canon_corpus.json: ~1,000 structurally distinct base
molecules, each with one or more renderings of the same structure. Ground
truth for pairwise equality is by construction: two entries denote the same
molecule iff they share a base id.

Base distinctness is enforced with a canonicalizer-independent structural
invariant (formula, degree sequence, bond-order multiset, ring sizes,
element/charge/H profiles); candidates colliding on the invariant are
dropped, so every kept pair of bases provably differs. Stereoisomer families
are the exception: the invariant is stereo-blind, so those bases are
hand-asserted distinct and their shared invariant is blacklisted for
everything else.

Renderings come from randomized graph traversal plus string-level transforms
(global slash flips preserve geometry by definition) plus hand-written
equivalent forms (kekule vs aromatic, re-rooted, bracket-H variants).

Run from the repository root:  python3 scripts/build_canon_corpus.py
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from genmol import random_smiles  # noqa: E402

from molbench.chem import (  # noqa: E402
    ChemError,
    formula_of,
    parse_smiles,
    write_random,
)

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "canon_corpus.json"

# Well-known public structures: drugs, solvents, natural products.
CURATED = [
    "CC(=O)Oc1ccccc1C(=O)O",                        # aspirin
    "CC(=O)Nc1ccc(O)cc1",                           # paracetamol
    "Cn1cnc2c1c(=O)n(C)c(=O)n2C",                   # caffeine
    "CC(C)Cc1ccc(C(C)C(=O)O)cc1",                   # ibuprofen
    "CCN(CC)CCCC(C)NC1=C2C=CC(Cl)=CC2=NC2=CC=C(OC)C=C12",  # quinacrine
    "OCC1OC(O)C(O)C(O)C1O",                         # a hexose ring
    "NC(CC1=CNC2=CC=CC=C12)C(=O)O",                 # tryptophan
    "NC(CC1=CC=C(O)C=C1)C(=O)O",                    # tyrosine
    "NC(CS)C(=O)O",                                 # cysteine
    "OC(=O)C1CCCN1",                                # proline
    "NC(N)=NCCCC(N)C(=O)O",                         # arginine
    "CSCCC(N)C(=O)O",                               # methionine
    "OC(=O)CC(O)(CC(=O)O)C(=O)O",                   # citric acid
    "OC(=O)C=CC(=O)O",                              # butenedioic acid
    "CC(O)C(=O)O",                                  # lactic acid
    "OCC(O)CO",                                     # glycerol
    "ClC(Cl)(Cl)Cl",                                # carbon tetrachloride
    "ClCCl",                                        # dichloromethane
    "CC(C)=O",                                      # acetone
    "CCOC(C)=O",                                    # ethyl acetate
    "CCOCC",                                        # diethyl ether
    "C1CCOC1",                                      # THF
    "CN(C)C=O",                                     # DMF
    "CS(C)=O",                                      # DMSO
    "CC#N",                                         # acetonitrile
    "Cc1ccccc1",                                    # toluene
    "Cc1ccccc1C",                                   # o-xylene
    "Cc1cccc(C)c1",                                 # m-xylene
    "Cc1ccc(C)cc1",                                 # p-xylene
    "c1ccc(-c2ccccc2)cc1",                          # biphenyl
    "c1ccc2ccccc2c1",                               # naphthalene
    "c1ccc2cc3ccccc3cc2c1",                         # anthracene
    "C1CCC2CCCCC2C1",                               # decalin
    "C1CCC(CC1)C1CCCCC1",                           # bicyclohexyl
    "O=C1CCCCC1",                                   # cyclohexanone
    "OC1CCCCC1",                                    # cyclohexanol
    "N#Cc1ccccc1",                                  # benzonitrile
    "O=[N+]([O-])c1ccccc1",                         # nitrobenzene
    "Nc1ccccc1",                                    # aniline
    "Oc1ccccc1",                                    # phenol
    "OC(=O)c1ccccc1",                               # benzoic acid
    "O=Cc1ccccc1",                                  # benzaldehyde
    "CC(=O)c1ccccc1",                               # acetophenone
    "c1ccncc1",                                     # pyridine
    "c1ccoc1",                                      # furan
    "c1ccsc1",                                      # thiophene
    "c1cc[nH]c1",                                   # pyrrole
    "c1cnc[nH]1",                                   # imidazole
    "c1ccc2[nH]ccc2c1",                             # indole
    "c1ccc2ncccc2c1",                               # quinoline
    "OCCN",                                         # ethanolamine
    "NCCN",                                         # ethylenediamine
    "OCCO",                                         # ethylene glycol
    "FC(F)(F)c1ccccc1",                             # benzotrifluoride
    "CC(C)(C)c1ccccc1",                             # tert-butylbenzene
    "CC(C)(C)O",                                    # tert-butanol
    "CC(C)O",                                       # isopropanol
    "CCCCCCCCCCCCCCCC(=O)O",                        # palmitic acid
    "CN1CC[C@]23c4c5ccc(O)c4O[C@H]2[C@@H](O)C=C[C@H]3[C@H]1C5",  # morphine
    "CC(C)(N)Cc1ccccc1",                            # phentermine
    "OC(=O)c1cc(O)c(O)c(O)c1",                      # gallic acid
    "COc1cc(C=O)ccc1O",                             # vanillin
    "CC1=CC(=O)CC(C)(C)C1",                         # isophorone
    "O=C1OC(=O)c2ccccc21",                          # phthalic anhydride
    "O=C(O)c1ccccc1C(=O)O",                         # phthalic acid
    "O=S(=O)(O)c1ccccc1",                           # benzenesulfonic acid
    "NS(=O)(=O)c1ccccc1",                           # benzenesulfonamide
    "[O-]C(=O)c1ccccc1.[Na+]",                      # sodium benzoate
    "[NH4+].[Cl-]",                                 # ammonium chloride
]

# Blocks of hand-written strings that denote the same molecule; none came
# from this package's writer. One block = one base.
HAND_EQUIVALENT = [
    ["c1ccccc1", "C1=CC=CC=C1"],
    ["OC1=CC=CC=C1", "c1ccc(O)cc1", "c1ccc(cc1)O"],
    ["CCO", "OCC", "C(O)C", "C(C)O"],
    ["CC(=O)O", "OC(C)=O", "CC(O)=O", "C(C)(=O)O"],
    ["CCN", "NCC", "C(N)C"],
    ["CC(C)C", "C(C)(C)C"],
    ["C1CCCCC1", "C2CCCCC2"],
    ["C1=CC=NC=C1", "n1ccccc1"],
    ["N#CC", "CC#N"],
    ["OCC=O", "O=CCO", "C(=O)CO"],
    ["O=C(N)c1ccccc1", "NC(=O)c1ccccc1", "c1ccc(C(N)=O)cc1"],
    ["CSC", "S(C)C"],
    ["CN(C)C", "N(C)(C)C"],
    ["C(O)CO", "C(CO)O"],
    ["C(Cl)Cl", "[CH2](Cl)Cl"],
    ["C1=CC=C2C(=C1)C=CC=C2", "c1ccc2ccccc2c1"],
    ["[H]OC([H])([H])C([H])([H])[H]", "CCO"],
    ["C(F)(F)F", "FC(F)F"],
]

# Stereoisomer families: inner lists are renderings of one molecule, sibling
# lists are distinct molecules sharing a stereo-blind invariant. Equality and
# distinctness here are asserted by hand (CIP reasoning in comments).
STEREO_FAMILIES = [
    # 1,2-difluoroethene: trans vs cis; global slash flip preserves geometry
    [["F/C=C/F", "F\\C=C\\F"], ["F/C=C\\F", "F\\C=C/F"]],
    # 2-butene
    [["C/C=C/C", "C\\C=C\\C"], ["C/C=C\\C", "C\\C=C/C"]],
    # alanine enantiomers; the re-rooted form keeps the configuration
    [["N[C@@H](C)C(=O)O", "N[C@@H](C)C(O)=O", "[C@H](N)(C)C(=O)O"],
     ["N[C@H](C)C(=O)O", "N[C@H](C)C(O)=O"]],
    # 2,3-butanediol: same-tag strings are the achiral meso form (a mirror
    # image of itself), mixed-tag strings are the (R,R)/(S,S) enantiomers
    [["C[C@H](O)[C@H](O)C", "C[C@@H](O)[C@@H](O)C"],
     ["C[C@H](O)[C@@H](O)C"],
     ["C[C@@H](O)[C@H](O)C"]],
    # 2-butenal: E vs Z
    [["C/C=C/C=O"], ["C/C=C\\C=O"]],
    # tartaric-like diol acid: meso vs one chiral form
    [["OC(=O)[C@H](O)[C@H](O)C(=O)O", "OC(=O)[C@@H](O)[C@@H](O)C(=O)O"],
     ["OC(=O)[C@H](O)[C@@H](O)C(=O)O"]],
]


def invariant(smiles: str):
    """Canonicalizer-independent, stereo-blind structural fingerprint."""
    mol = parse_smiles(smiles)
    formula = str(formula_of(mol))
    degrees = tuple(sorted(mol.degree(i) for i in range(len(mol.atoms))))
    bonds = tuple(sorted((b.order, b.aromatic) for b in mol.bonds))
    ring_sizes = tuple(sorted(len(r) for r in mol.sssr()))
    elems = tuple(
        sorted((a.element, a.charge, a.aromatic, a.total_h) for a in mol.atoms)
    )
    return (formula, degrees, bonds, ring_sizes, elems)


def flip_slashes(smiles: str) -> str:
    """Global up/down exchange; preserves every double-bond geometry."""
    return smiles.translate(str.maketrans({"/": "\\", "\\": "/"}))


def main() -> int:
    rng = random.Random("canon-corpus:1")
    bases: list[dict] = []
    seen = set()

    def admit(renderings: list[str], kind: str) -> bool:
        keys = set()
        for smi in renderings:
            try:
                keys.add(invariant(smi))
            except ChemError:
                return False
        if len(keys) != 1:
            raise SystemExit(
                f"renderings disagree on structural invariant: {renderings}"
            )
        key = keys.pop()
        if key in seen:
            return False
        seen.add(key)
        bases.append(
            {"base": len(bases), "kind": kind, "renderings": renderings}
        )
        return True

    # stereo families first: distinct bases on one blacklisted invariant
    for family in STEREO_FAMILIES:
        family_key = invariant(family[0][0])
        for member in family:
            for smi in member:
                if invariant(smi) != family_key:
                    raise SystemExit(f"family member off-invariant: {smi}")
            bases.append(
                {"base": len(bases), "kind": "stereo", "renderings": member}
            )
        seen.add(family_key)

    for block in HAND_EQUIVALENT:
        admit(list(block), "hand")
    for smi in CURATED:
        admit([smi], "curated")
    while len(bases) < 1000:
        admit([random_smiles(rng, max_atoms=28)], "random")

    # expand single-rendering bases with randomized traversals of the same
    # parsed graph, plus a slash flip when geometry markers are present
    for entry in bases:
        first = entry["renderings"][0]
        mol = parse_smiles(first)
        wrng = random.Random(f"canon-corpus-render:{entry['base']}")
        extra = [write_random(mol, wrng) for _ in range(2)]
        if ("/" in first or "\\" in first) and flip_slashes(first) != first:
            extra.append(flip_slashes(first))
        known = set(entry["renderings"])
        for smi in extra:
            if smi not in known:
                entry["renderings"].append(smi)
                known.add(smi)

    payload = {
        "note": (
            "equality ground truth is by construction: entries denote the"
            " same molecule iff they share a base id; bases are pairwise"
            " distinct by a stereo-blind structural invariant, except"
            " stereo-family bases which are hand-asserted distinct"
        ),
        "bases": bases,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    total = sum(len(b["renderings"]) for b in bases)
    kinds = {}
    for b in bases:
        kinds[b["kind"]] = kinds.get(b["kind"], 0) + 1
    print(f"wrote {OUT}: {len(bases)} bases, {total} renderings, {kinds}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
