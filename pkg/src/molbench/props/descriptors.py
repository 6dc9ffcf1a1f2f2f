"""Plain structural descriptors: weight, H-bonding counts, flexibility, PSA."""

from __future__ import annotations

from ..chem.elements import atomic_weight
from ..chem.mol import Molecule

_H_MASS = atomic_weight("H")


def molecular_weight(mol: Molecule) -> float:
    """Isotope-aware average molecular weight, implicit hydrogens included."""
    total = 0.0
    for a in mol.atoms:
        total += atomic_weight(a.element, a.isotope)
        total += a.total_h * _H_MASS
    return total


def h_bond_donors(mol: Molecule) -> int:
    """N or O atoms carrying at least one hydrogen."""
    return sum(
        1
        for a in mol.atoms
        if a.element in ("N", "O") and a.total_h >= 1
    )


def h_bond_acceptors(mol: Molecule) -> int:
    """N and O atoms, except pyrrole-type nitrogens whose lone pair sits in
    the ring pi system (aromatic N bearing an H or a third connection)."""
    count = 0
    for i, a in enumerate(mol.atoms):
        if a.element == "O":
            count += 1
        elif a.element == "N":
            if a.aromatic and (a.total_h >= 1 or mol.degree(i) == 3):
                continue
            count += 1
    return count


def rotatable_bonds(mol: Molecule) -> int:
    """Acyclic single bonds between two non-terminal heavy atoms.

    Terminal here means a single heavy neighbour; triple-bond axes are
    excluded since rotation about them is unobservable.
    """
    n = 0
    for bi, b in enumerate(mol.bonds):
        if b.order != 1 or b.aromatic or mol.bond_in_ring(bi):
            continue
        if mol.degree(b.a) < 2 or mol.degree(b.b) < 2:
            continue
        if _has_triple(mol, b.a) or _has_triple(mol, b.b):
            continue
        n += 1
    return n


def _has_triple(mol: Molecule, i: int) -> bool:
    return any(mol.bonds[bi].order == 3 for bi in mol.bond_indices(i))


def aromatic_ring_count(mol: Molecule) -> int:
    return sum(
        1
        for ring in mol.sssr()
        if all(mol.atoms[i].aromatic for i in ring)
    )


# Topological polar surface area, N/O contributions only. Keys are
# (element, charge, h_count, shape) where shape encodes the bond pattern.
_TPSA = {
    ("N", 0, 0, "sss"): 3.24,
    ("N", 0, 0, "sd"): 12.36,
    ("N", 0, 0, "t"): 23.79,
    ("N", 0, 0, "ssdd"): 11.68,
    ("N", 0, 0, "dt"): 13.60,
    ("N", 0, 0, "sss3"): 3.01,
    ("N", 0, 1, "ss"): 12.03,
    ("N", 0, 1, "ss3"): 21.94,
    ("N", 0, 1, "d"): 23.85,
    ("N", 0, 2, "s"): 26.02,
    ("N", 1, 0, "ssss"): 0.00,
    ("N", 1, 0, "ssd"): 3.01,
    ("N", 1, 0, "t"): 4.36,
    ("N", 1, 1, "sss"): 4.44,
    ("N", 1, 1, "sd"): 13.97,
    ("N", 1, 2, "ss"): 16.61,
    ("N", 1, 2, "d"): 25.59,
    ("N", 1, 3, "s"): 27.64,
    ("N", 0, 0, "aa"): 12.89,
    ("N", 0, 0, "aaa"): 4.41,
    ("N", 0, 0, "saa"): 4.93,
    ("N", 0, 0, "daa"): 8.39,
    ("N", 0, 1, "aa"): 15.79,
    ("N", 1, 0, "aaa"): 4.10,
    ("N", 1, 0, "saa"): 3.88,
    ("N", 1, 1, "aa"): 14.14,
    ("O", 0, 0, "ss"): 9.23,
    ("O", 0, 0, "ss3"): 12.53,
    ("O", 0, 0, "d"): 17.07,
    ("O", 0, 1, "s"): 20.23,
    ("O", -1, 0, "s"): 23.06,
    ("O", 0, 0, "aa"): 13.14,
}


def _tpsa_shape(mol: Molecule, i: int) -> str:
    singles = doubles = triples = arom = 0
    in_3ring = False
    for bi in mol.bond_indices(i):
        b = mol.bonds[bi]
        if b.aromatic:
            arom += 1
        elif b.order == 1:
            singles += 1
        elif b.order == 2:
            doubles += 1
        elif b.order == 3:
            triples += 1
    if any(len(r) == 3 for r in mol.rings_of_atom(i)):
        in_3ring = True
    shape = "s" * singles + "d" * doubles + "t" * triples + "a" * arom
    if in_3ring and arom == 0 and doubles == 0 and triples == 0:
        shape += "3"
    return shape


def tpsa(mol: Molecule) -> float:
    """Fragment-additive polar surface area over N and O environments.

    Environments missing from the published table contribute nothing, which
    keeps the value a lower bound for exotic charge states.
    """
    total = 0.0
    for i, a in enumerate(mol.atoms):
        if a.element not in ("N", "O"):
            continue
        charge = max(-1, min(1, a.charge))
        key = (a.element, charge, min(a.total_h, 3), _tpsa_shape(mol, i))
        total += _TPSA.get(key, 0.0)
    return total


__all__ = [
    "molecular_weight",
    "h_bond_donors",
    "h_bond_acceptors",
    "rotatable_bonds",
    "aromatic_ring_count",
    "tpsa",
]
