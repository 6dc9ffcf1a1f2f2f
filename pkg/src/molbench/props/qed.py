"""Drug-likeness score: weighted geometric mean of eight desirability terms.

Each descriptor passes through an asymmetric double-sigmoid desirability
function with published fit constants; the score is the weight-normalized
geometric mean, bounded in (0, 1]. The structural-alert term uses a reduced
hand-coded catalog of clearly flaggable motifs, so absolute values are an
approximation of catalog-complete implementations while ordering and range
behaviour are preserved.
"""

from __future__ import annotations

import math

from ..chem.mol import Molecule
from .crippen import crippen_contributions
from .descriptors import (
    aromatic_ring_count,
    h_bond_acceptors,
    h_bond_donors,
    molecular_weight,
    rotatable_bonds,
    tpsa,
)

# descriptor -> (a, b, c, d, e, f, dmax)
ADS_PARAMS = {
    "MW": (2.817065973, 392.5754953, 290.7489764, 2.419764353,
           49.22325677, 65.37051707, 104.9805561),
    "ALOGP": (3.172690585, 137.8624751, 2.534937431, 4.581497897,
              0.822739154, 0.576295591, 131.3186604),
    "HBA": (2.948620388, 160.4605972, 3.615294657, 4.435986202,
            0.290141953, 1.300669958, 148.7763046),
    "HBD": (1.618662227, 1010.051101, 0.985094388, 0.000000001,
            0.713820843, 0.920922555, 258.1632616),
    "PSA": (1.876861559, 125.2232657, 62.90773554, 87.83366614,
            12.01999824, 28.51324732, 104.5686167),
    "ROTB": (0.01, 272.4121427, 2.558379970, 1.565547684,
             1.271567166, 2.758063707, 105.4420403),
    "AROM": (3.217788970, 957.7374108, 2.274627939, 0.000000001,
             1.317690384, 0.375760881, 312.3372610),
    "ALERTS": (0.01, 1199.094025, -0.09002883, 0.000000001,
               0.185904477, 0.875193782, 417.7253140),
}

WEIGHTS = {
    "MW": 0.66,
    "ALOGP": 0.46,
    "HBA": 0.05,
    "HBD": 0.61,
    "PSA": 0.06,
    "ROTB": 0.65,
    "AROM": 0.48,
    "ALERTS": 0.95,
}

_ORDER = ("MW", "ALOGP", "HBA", "HBD", "PSA", "ROTB", "AROM", "ALERTS")


def desirability(name: str, x: float) -> float:
    a, b, c, d, e, f, dmax = ADS_PARAMS[name]
    arg1 = (x - c + d / 2.0) / e
    arg2 = (x - c - d / 2.0) / f
    val = a + b / (1.0 + math.exp(-arg1)) * (
        1.0 - 1.0 / (1.0 + math.exp(-arg2))
    )
    return val / dmax


def _doubles(mol: Molecule, i: int) -> list[int]:
    return [
        mol.bonds[bi].other(i)
        for bi in mol.bond_indices(i)
        if mol.bonds[bi].order == 2 and not mol.bonds[bi].aromatic
    ]


def structural_alerts(mol: Molecule) -> int:
    """Count of flagged motifs from a reduced alert catalog."""
    hits = 0
    for i, a in enumerate(mol.atoms):
        if a.element == "N":
            dbl = _doubles(mol, i)
            # nitro
            if a.charge == 1 and any(
                mol.atoms[j].element == "O" for j in dbl
            ) and any(
                mol.atoms[j].element == "O" and mol.atoms[j].charge == -1
                for j in mol.neighbors(i)
            ):
                hits += 1
            # azo / azide backbone
            if any(mol.atoms[j].element == "N" for j in dbl):
                hits += 1
            # hydrazine
            if a.total_h >= 1 and any(
                mol.atoms[j].element == "N" and mol.atoms[j].total_h >= 1
                and mol.bonds[mol.bond_between(i, j)].order == 1
                and not mol.atoms[j].aromatic and not a.aromatic
                for j in mol.neighbors(i)
            ):
                hits += 1
        elif a.element == "O":
            # peroxide, counted once per O-O bond
            for j in mol.neighbors(i):
                if j > i and mol.atoms[j].element == "O":
                    b = mol.bonds[mol.bond_between(i, j)]
                    if b.order == 1 and not b.aromatic:
                        hits += 1
        elif a.element == "S":
            if a.total_h >= 1:
                hits += 1  # thiol
        elif a.element == "C" and not a.aromatic:
            dbl = _doubles(mol, i)
            has_o_dbl = any(mol.atoms[j].element == "O" for j in dbl)
            if has_o_dbl:
                if a.total_h >= 1 and mol.degree(i) <= 2:
                    hits += 1  # aldehyde
                if any(
                    mol.atoms[j].element in ("F", "Cl", "Br", "I")
                    for j in mol.neighbors(i)
                ):
                    hits += 1  # acyl halide
                if any(
                    mol.atoms[j].element == "N" for j in dbl
                ):
                    hits += 1  # isocyanate-like cumulated N=C=O
            elif mol.degree(i) + a.total_h == 4:
                if any(
                    mol.atoms[j].element in ("Br", "I")
                    for j in mol.neighbors(i)
                ):
                    hits += 1  # heavy alkyl halide
    return hits


def qed_descriptors(mol: Molecule) -> dict[str, float]:
    return {
        "MW": molecular_weight(mol),
        "ALOGP": crippen_contributions(mol).logp,
        "HBA": float(h_bond_acceptors(mol)),
        "HBD": float(h_bond_donors(mol)),
        "PSA": tpsa(mol),
        "ROTB": float(rotatable_bonds(mol)),
        "AROM": float(aromatic_ring_count(mol)),
        "ALERTS": float(structural_alerts(mol)),
    }


def qed(mol: Molecule) -> float:
    desc = qed_descriptors(mol)
    num = 0.0
    den = 0.0
    for name in _ORDER:
        w = WEIGHTS[name]
        d = max(desirability(name, desc[name]), 1e-12)
        num += w * math.log(d)
        den += w
    return math.exp(num / den)


__all__ = [
    "ADS_PARAMS",
    "WEIGHTS",
    "desirability",
    "qed",
    "qed_descriptors",
    "structural_alerts",
]
