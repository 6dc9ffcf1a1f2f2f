"""From-scratch SMILES core: parsing, canonicalization, formulas, fingerprints.

The public surface other modules build on:

    parse_smiles(text) -> Molecule
    canonicalize(mol) -> CanonicalSmiles
    canonical_smiles(text, stereo=True) -> str   (parse + canonicalize)
    formula_of(mol) -> MolecularFormula
    morgan_fingerprint(mol, radius=2, size=2048) -> Fingerprint
    tanimoto(a, b) -> float
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_smiles_of
from .errors import (
    ChemError,
    InvalidStereoError,
    KekulizationError,
    SmilesSyntaxError,
    ValenceError,
)
from .fingerprint import DimensionMismatch, Fingerprint, morgan_fingerprint, tanimoto
from .formula import MolecularFormula, formula_of, parse_formula
from .mol import Atom, Bond, Molecule
from .parser import parse_smiles
from .writer import write_random


@dataclass(frozen=True)
class CanonicalSmiles:
    text: str

    def __str__(self) -> str:
        return self.text


def canonicalize(mol: Molecule, stereo: bool = True) -> CanonicalSmiles:
    return CanonicalSmiles(canonical_smiles_of(mol, stereo=stereo))


def canonical_smiles(text: str, stereo: bool = True) -> str:
    return canonical_smiles_of(parse_smiles(text), stereo=stereo)


def same_molecule(a: str, b: str, stereo: bool = True) -> bool:
    """Whether two SMILES denote the same molecule (canonical equality)."""
    return canonical_smiles(a, stereo=stereo) == canonical_smiles(b, stereo=stereo)


def is_valid_smiles(text: str) -> bool:
    try:
        parse_smiles(text)
        return True
    except ChemError:
        return False


__all__ = [
    "Atom",
    "Bond",
    "Molecule",
    "CanonicalSmiles",
    "MolecularFormula",
    "Fingerprint",
    "ChemError",
    "SmilesSyntaxError",
    "ValenceError",
    "KekulizationError",
    "InvalidStereoError",
    "DimensionMismatch",
    "parse_smiles",
    "canonicalize",
    "canonical_smiles",
    "same_molecule",
    "is_valid_smiles",
    "formula_of",
    "parse_formula",
    "morgan_fingerprint",
    "tanimoto",
    "write_random",
]
