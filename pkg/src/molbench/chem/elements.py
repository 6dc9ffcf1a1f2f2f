"""Element data: symbols, atomic numbers, masses, and allowed valences."""

from __future__ import annotations

# Standard atomic weights (CIAAW 2021 abridged). Enough coverage for any
# bracket atom; parsing rejects symbols not listed here.
ATOMIC_WEIGHTS: dict[str, float] = {
    "H": 1.008, "He": 4.002602,
    "Li": 6.94, "Be": 9.0121831, "B": 10.81, "C": 12.011, "N": 14.007,
    "O": 15.999, "F": 18.998403163, "Ne": 20.1797,
    "Na": 22.98976928, "Mg": 24.305, "Al": 26.9815385, "Si": 28.085,
    "P": 30.973761998, "S": 32.06, "Cl": 35.45, "Ar": 39.948,
    "K": 39.0983, "Ca": 40.078, "Sc": 44.955908, "Ti": 47.867,
    "V": 50.9415, "Cr": 51.9961, "Mn": 54.938044, "Fe": 55.845,
    "Co": 58.933194, "Ni": 58.6934, "Cu": 63.546, "Zn": 65.38,
    "Ga": 69.723, "Ge": 72.630, "As": 74.921595, "Se": 78.971,
    "Br": 79.904, "Kr": 83.798,
    "Rb": 85.4678, "Sr": 87.62, "Y": 88.90584, "Zr": 91.224,
    "Nb": 92.90637, "Mo": 95.95, "Tc": 98.0, "Ru": 101.07,
    "Rh": 102.90550, "Pd": 106.42, "Ag": 107.8682, "Cd": 112.414,
    "In": 114.818, "Sn": 118.710, "Sb": 121.760, "Te": 127.60,
    "I": 126.90447, "Xe": 131.293,
    "Cs": 132.90545196, "Ba": 137.327, "La": 138.90547, "Ce": 140.116,
    "Pr": 140.90766, "Nd": 144.242, "Pm": 145.0, "Sm": 150.36,
    "Eu": 151.964, "Gd": 157.25, "Tb": 158.92535, "Dy": 162.500,
    "Ho": 164.93033, "Er": 167.259, "Tm": 168.93422, "Yb": 173.045,
    "Lu": 174.9668, "Hf": 178.49, "Ta": 180.94788, "W": 183.84,
    "Re": 186.207, "Os": 190.23, "Ir": 192.217, "Pt": 195.084,
    "Au": 196.966569, "Hg": 200.592, "Tl": 204.38, "Pb": 207.2,
    "Bi": 208.98040, "Po": 209.0, "At": 210.0, "Rn": 222.0,
    "Fr": 223.0, "Ra": 226.0, "Ac": 227.0, "Th": 232.0377,
    "Pa": 231.03588, "U": 238.02891,
}

ATOMIC_NUMBERS: dict[str, int] = {
    sym: i + 1
    for i, sym in enumerate(
        "H He Li Be B C N O F Ne Na Mg Al Si P S Cl Ar K Ca Sc Ti V Cr Mn Fe "
        "Co Ni Cu Zn Ga Ge As Se Br Kr Rb Sr Y Zr Nb Mo Tc Ru Rh Pd Ag Cd In "
        "Sn Sb Te I Xe Cs Ba La Ce Pr Nd Pm Sm Eu Gd Tb Dy Ho Er Tm Yb Lu Hf "
        "Ta W Re Os Ir Pt Au Hg Tl Pb Bi Po At Rn Fr Ra Ac Th Pa U".split()
    )
}

# Elements writable without brackets.
ORGANIC_SUBSET = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}

# Lowercase symbols accepted as aromatic atoms (bracket or plain).
AROMATIC_ELEMENTS = {"B", "C", "N", "O", "P", "S", "Se", "As", "Te"}

# Allowed total valences (bond order sum + hydrogens) keyed by element, then
# adjusted by formal charge. Implicit hydrogen filling picks the smallest
# allowed valence >= the bond order sum.
_NEUTRAL_VALENCES: dict[str, tuple[int, ...]] = {
    "H": (1,), "B": (3,), "C": (4,), "N": (3, 5), "O": (2,),
    "F": (1,), "Cl": (1,), "Br": (1,), "I": (1,),
    "P": (3, 5), "S": (2, 4, 6), "Si": (4,), "Se": (2, 4, 6),
    "As": (3, 5), "Te": (2, 4, 6),
}

# (element, charge) -> allowed valences where the plain charge shift rule
# (valence +/- charge) is wrong or needs pinning.
_CHARGED_VALENCES: dict[tuple[str, int], tuple[int, ...]] = {
    ("C", 1): (3,), ("C", -1): (3,),
    ("N", 1): (4,), ("N", -1): (2,),
    ("O", 1): (3,), ("O", -1): (1,),
    ("S", 1): (3, 5), ("S", -1): (1,),
    ("P", 1): (4,), ("P", -1): (2,),
    ("B", -1): (4,),
    ("F", -1): (0,), ("Cl", -1): (0,), ("Br", -1): (0,), ("I", -1): (0,),
    ("H", 1): (0,), ("H", -1): (0,),
    ("Se", -1): (1,), ("Te", -1): (1,),
}

# Elements whose valence is checked strictly. Others (metals, noble gases)
# accept whatever the SMILES states: they only occur as bracket atoms.
COVALENT_ELEMENTS = set(_NEUTRAL_VALENCES)


def allowed_valences(element: str, charge: int) -> tuple[int, ...] | None:
    """Allowed valences for an element/charge pair, or None if unchecked."""
    if element not in COVALENT_ELEMENTS:
        return None
    if charge == 0:
        return _NEUTRAL_VALENCES[element]
    if (element, charge) in _CHARGED_VALENCES:
        return _CHARGED_VALENCES[(element, charge)]
    # Fallback shift for multiply charged covalent atoms: clamp at zero.
    base = _NEUTRAL_VALENCES[element]
    return tuple(sorted({max(0, v + charge) for v in base}))


def is_element(symbol: str) -> bool:
    return symbol in ATOMIC_WEIGHTS


def atomic_number(symbol: str) -> int:
    return ATOMIC_NUMBERS[symbol]


def atomic_weight(symbol: str, isotope: int | None = None) -> float:
    # Isotope-labelled atoms use the mass number directly; close enough for
    # formula-weight reporting and keeps the table small.
    if isotope:
        return float(isotope)
    return ATOMIC_WEIGHTS[symbol]
