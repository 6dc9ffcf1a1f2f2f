"""Atom-contribution estimates of logP and molar refractivity.

Wildman-Crippen style: every atom (hydrogens included) is assigned one type
from an ordered rule list, first match wins, and the property is the sum of
per-type contributions. Rules are expressed as graph predicates over the
parsed molecule rather than substructure query strings; the published
contribution constants are kept verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..chem.mol import Molecule

# type -> (logP contribution, MR contribution). Types without a published MR
# value contribute 0 there.
CONTRIB: dict[str, tuple[float, float]] = {
    "C1": (0.1441, 2.503),
    "C2": (0.0000, 2.433),
    "C3": (-0.2035, 2.753),
    "C4": (-0.2051, 2.731),
    "C5": (-0.2783, 5.007),
    "C6": (0.1551, 3.513),
    "C7": (0.0017, 3.888),
    "C8": (0.08452, 2.464),
    "C9": (-0.1444, 2.412),
    "C10": (-0.0516, 2.488),
    "C11": (0.1193, 2.582),
    "C12": (-0.0967, 2.576),
    "C13": (-0.5443, 4.041),
    "C14": (0.0000, 3.257),
    "C15": (0.2450, 3.564),
    "C16": (0.1980, 3.180),
    "C17": (0.0000, 3.104),
    "C18": (0.1581, 3.350),
    "C19": (0.2955, 4.346),
    "C20": (0.2713, 3.904),
    "C21": (0.1360, 3.509),
    "C22": (0.4619, 4.067),
    "C23": (0.5437, 3.853),
    "C24": (0.1893, 2.673),
    "C25": (-0.8186, 3.135),
    "C26": (0.2640, 4.305),
    "C27": (0.2148, 2.693),
    "CS": (0.08129, 3.243),
    "H1": (0.1230, 1.057),
    "H2": (-0.2677, 1.395),
    "H3": (0.2142, 0.9627),
    "H4": (0.2980, 1.805),
    "HS": (0.1125, 1.112),
    "N1": (-1.0190, 2.262),
    "N2": (-0.7096, 2.173),
    "N3": (-1.0270, 2.827),
    "N4": (-0.5188, 3.000),
    "N5": (0.08387, 1.757),
    "N6": (0.1836, 2.428),
    "N7": (-0.3187, 1.839),
    "N8": (-0.4458, 2.819),
    "N9": (0.01508, 1.725),
    "N10": (-1.950, 0.0),
    "N11": (-0.3239, 2.202),
    "N12": (-1.119, 0.0),
    "N13": (-0.3396, 0.2604),
    "N14": (0.2887, 3.359),
    "NS": (-0.4806, 2.134),
    "O1": (0.1552, 1.080),
    "O2": (-0.2893, 0.8238),
    "O3": (-0.0684, 1.085),
    "O4": (-0.4195, 1.182),
    "O5": (0.0335, 3.367),
    "O6": (-0.3339, 0.7774),
    "O7": (-1.189, 0.000),
    "O8": (0.1788, 3.135),
    "O9": (-0.1526, 0.000),
    "O10": (0.1129, 0.2215),
    "O11": (0.4833, 0.3890),
    "O12": (-1.326, 0.0),
    "OS": (-0.1188, 0.6865),
    "F": (0.4202, 1.108),
    "Cl": (0.6895, 5.853),
    "Br": (0.8456, 8.927),
    "I": (0.8857, 14.02),
    "Hal": (-2.996, 0.0),
    "P": (0.8612, 6.920),
    "S1": (0.6482, 7.591),
    "S2": (-0.0024, 7.365),
    "S3": (0.6237, 6.691),
}

_HETERO = {"N", "O", "P", "S", "F", "Cl", "Br", "I"}
_PARAMETRIZED = {"C", "H", "N", "O", "P", "S", "F", "Cl", "Br", "I"}


@dataclass(frozen=True)
class CrippenResult:
    logp: float
    mr: float
    unmatched: int
    types: tuple[str, ...]


def _double_partners(mol: Molecule, i: int) -> list[int]:
    # kekulized order-2 bonds only; aromatic bonds never count as doubles here
    out = []
    for bi in mol.bond_indices(i):
        b = mol.bonds[bi]
        if b.order == 2 and not b.aromatic:
            out.append(b.other(i))
    return out


def _has_triple(mol: Molecule, i: int) -> bool:
    return any(
        mol.bonds[bi].order == 3 for bi in mol.bond_indices(i)
    )


def _single_partners(mol: Molecule, i: int) -> list[int]:
    out = []
    for bi in mol.bond_indices(i):
        b = mol.bonds[bi]
        if b.order == 1 and not b.aromatic:
            out.append(b.other(i))
    return out


def _type_carbon(mol: Molecule, i: int) -> str:
    a = mol.atoms[i]
    hs = a.total_h
    nbrs = mol.neighbors(i)

    if a.aromatic:
        singles = _single_partners(mol, i)
        for j in singles:
            e = mol.atoms[j].element
            if e not in _HETERO and e not in ("C", "H") and hs == 0:
                return "C13"
        for j in singles:
            e = mol.atoms[j].element
            if e == "F":
                return "C14"
            if e == "Cl":
                return "C15"
            if e == "Br":
                return "C16"
            if e == "I":
                return "C17"
        if hs >= 1:
            return "C18"
        n_arom_bonds = sum(
            1 for bi in mol.bond_indices(i) if mol.bonds[bi].aromatic
        )
        if n_arom_bonds >= 3:
            return "C19"
        for j in singles:
            if mol.atoms[j].aromatic:
                return "C20"
        for j in singles:
            e = mol.atoms[j].element
            if e == "C":
                return "C21"
            if e == "N":
                return "C22"
            if e == "O":
                return "C23"
            if e == "S":
                return "C24"
        if any(
            mol.atoms[j].element in ("C", "N", "O")
            for j in _double_partners(mol, i)
        ):
            return "C25"
        return "CS"

    doubles = _double_partners(mol, i)
    x = mol.degree(i) + hs

    if _has_triple(mol, i):
        return "C7" if x == 2 else "CS"

    if not doubles and x == 4:
        aliph_het = any(
            not mol.atoms[j].aromatic and mol.atoms[j].element in _HETERO
            for j in nbrs
        )
        all_aliph_c = all(
            not mol.atoms[j].aromatic and mol.atoms[j].element == "C"
            for j in nbrs
        )
        arom_nbrs = [j for j in nbrs if mol.atoms[j].aromatic]
        if all_aliph_c:
            return "C1" if hs >= 2 else "C2"
        if aliph_het:
            return "C3" if hs >= 2 else "C4"
        if arom_nbrs:
            if hs == 3:
                if any(mol.atoms[j].element == "C" for j in arom_nbrs):
                    return "C8"
                return "C9"
            if hs == 2:
                return "C10"
            if hs == 1:
                return "C11"
            return "C12"
        if any(
            mol.atoms[j].element not in _PARAMETRIZED for j in nbrs
        ):
            return "C27"
        return "CS"

    if doubles:
        if any(
            not mol.atoms[j].aromatic and mol.atoms[j].element != "C"
            for j in doubles
        ):
            return "C5"
        if any(mol.atoms[j].aromatic for j in doubles):
            return "C26"
        if any(mol.atoms[j].aromatic for j in nbrs):
            return "C26"
        return "C6"
    return "CS"


def _type_nitrogen(mol: Molecule, i: int) -> str:
    a = mol.atoms[i]
    hs = a.total_h
    q = a.charge
    if a.aromatic:
        if q == 0:
            return "N11"
        if q > 0:
            return "N12"
        return "NS"
    nbrs = mol.neighbors(i)
    doubles = _double_partners(mol, i)
    triple = _has_triple(mol, i)
    deg = mol.degree(i)

    if q == 0:
        arom_nbr = any(mol.atoms[j].aromatic for j in nbrs)
        if hs == 2 and deg == 1:
            return "N3" if arom_nbr else "N1"
        if hs == 1 and deg == 2 and not doubles:
            return "N4" if arom_nbr else "N2"
        if hs >= 1 and doubles:
            return "N5"
        if hs == 0 and doubles and deg >= 2:
            return "N6"
        if hs == 0 and deg == 3 and not doubles and not triple:
            return "N8" if arom_nbr else "N7"
        if triple:
            return "N9"
        return "NS"
    if q > 0:
        if hs >= 1 and not doubles and not triple:
            return "N10"
        if triple:
            return "N14"
        if hs == 0 and (deg == 4 or doubles):
            return "N13"
        return "NS"
    return "N14"


def _carbonyl_oxygen(mol: Molecule, i: int, c: int) -> str:
    # i is a =O on aliphatic carbon c: split by the carbon's other substituents
    subs = [j for j in mol.neighbors(c) if j != i]
    if len(subs) == 2 and all(mol.atoms[j].element != "C" for j in subs):
        return "O11"
    if any(mol.atoms[j].aromatic for j in subs):
        return "O10"
    return "O9"


def _type_oxygen(mol: Molecule, i: int) -> str:
    a = mol.atoms[i]
    if a.aromatic:
        return "O1"
    hs = a.total_h
    q = a.charge
    nbrs = mol.neighbors(i)
    doubles = _double_partners(mol, i)

    if hs >= 1:
        return "O2"
    if q < 0 and mol.degree(i) == 1:
        j = nbrs[0]
        e = mol.atoms[j].element
        if e == "N":
            return "O5"
        if e == "S":
            return "O6"
        if e == "C":
            if any(
                mol.atoms[k].element == "O"
                for k in _double_partners(mol, j)
            ):
                return "O12"
            return "OS"
        return "O7"
    if doubles:
        j = doubles[0]
        e = mol.atoms[j].element
        if e in ("N", "O"):
            return "O5"
        if e == "S" and q == 0 and mol.atoms[j].charge == 0:
            return "O6"
        if e == "C":
            if mol.atoms[j].aromatic:
                return "O8"
            return _carbonyl_oxygen(mol, i, j)
        return "OS"
    if mol.degree(i) == 2:
        if any(mol.atoms[j].aromatic for j in nbrs):
            return "O4"
        return "O3"
    return "OS"


def _h_type_for(mol: Molecule, heavy: int) -> str:
    e = mol.atoms[heavy].element
    if e in ("C", "H"):
        return "H1"
    if e == "N":
        return "H3"
    if e == "O":
        nbrs = mol.neighbors(heavy)
        if any(mol.atoms[j].element == "N" for j in nbrs):
            return "H3"
        for j in nbrs:
            aj = mol.atoms[j]
            if aj.element in ("O", "S"):
                return "H4"
            if aj.element == "C" and any(
                mol.atoms[k].element in ("C", "N", "O", "S")
                for k in _double_partners(mol, j)
            ):
                return "H4"
        for j in nbrs:
            aj = mol.atoms[j]
            if aj.element == "C":
                if aj.aromatic or mol.degree(j) + aj.total_h == 4:
                    return "H2"
            elif aj.element not in ("N", "O"):
                return "H2"
        return "HS"
    return "H2"


def _type_heavy(mol: Molecule, i: int) -> str | None:
    e = mol.atoms[i].element
    if e == "C":
        return _type_carbon(mol, i)
    if e == "N":
        return _type_nitrogen(mol, i)
    if e == "O":
        return _type_oxygen(mol, i)
    if e == "S":
        a = mol.atoms[i]
        if a.aromatic:
            return "S3"
        return "S1" if a.charge == 0 else "S2"
    if e == "P":
        return "P"
    if e in ("F", "Cl", "Br", "I"):
        return e if mol.atoms[i].charge == 0 else "Hal"
    if e == "H":
        nbrs = mol.neighbors(i)
        return _h_type_for(mol, nbrs[0]) if nbrs else "HS"
    return None


def assign_types(mol: Molecule) -> list[str | None]:
    """Per-atom type labels for the molecule's explicit atoms."""
    return [_type_heavy(mol, i) for i in range(len(mol.atoms))]


def crippen_contributions(mol: Molecule) -> CrippenResult:
    logp = 0.0
    mr = 0.0
    unmatched = 0
    labels: list[str] = []
    for i, t in enumerate(assign_types(mol)):
        if t is None:
            unmatched += 1
            continue
        labels.append(t)
        lp, m = CONTRIB[t]
        logp += lp
        mr += m
        hs = mol.atoms[i].total_h
        if hs and mol.atoms[i].element != "H":
            ht = _h_type_for(mol, i)
            labels.extend([ht] * hs)
            hlp, hm = CONTRIB[ht]
            logp += hs * hlp
            mr += hs * hm
    return CrippenResult(logp, mr, unmatched, tuple(labels))


__all__ = ["CONTRIB", "CrippenResult", "assign_types", "crippen_contributions"]
