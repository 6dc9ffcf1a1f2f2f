"""Molecular formulas: counting, Hill-order rendering, and parsing."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .elements import is_element
from .errors import ChemError
from .mol import Molecule

_FORMULA_TOKEN = re.compile(r"([A-Z][a-z]?)(\d*)")


@dataclass(frozen=True)
class MolecularFormula:
    counts: tuple[tuple[str, int], ...]  # sorted element -> count pairs

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "MolecularFormula":
        clean = {el: n for el, n in counts.items() if n > 0}
        return cls(tuple(sorted(clean.items())))

    def as_dict(self) -> dict[str, int]:
        return dict(self.counts)

    @property
    def text(self) -> str:
        """Hill order: C first, H second, others alphabetical; no-carbon
        formulas are fully alphabetical."""
        counts = self.as_dict()
        parts: list[str] = []

        def fmt(el: str) -> str:
            n = counts[el]
            return el if n == 1 else f"{el}{n}"

        if "C" in counts:
            parts.append(fmt("C"))
            if "H" in counts:
                parts.append(fmt("H"))
            for el in sorted(counts):
                if el not in ("C", "H"):
                    parts.append(fmt(el))
        else:
            for el in sorted(counts):
                parts.append(fmt(el))
        return "".join(parts)

    def __str__(self) -> str:
        return self.text


def formula_of(mol: Molecule) -> MolecularFormula:
    """Element counts including implicit, bracket, and folded hydrogens."""
    counts: dict[str, int] = {}
    hydrogens = 0
    for idx, atom in enumerate(mol.atoms):
        counts[atom.element] = counts.get(atom.element, 0) + 1
        hydrogens += atom.total_h
    if hydrogens:
        counts["H"] = counts.get("H", 0) + hydrogens
    return MolecularFormula.from_counts(counts)


def parse_formula(text: str) -> MolecularFormula:
    """Parse 'C2H6O'-style text into counts; order-insensitive semantics."""
    text = text.strip()
    if not text:
        raise ChemError("empty formula")
    counts: dict[str, int] = {}
    pos = 0
    for m in _FORMULA_TOKEN.finditer(text):
        if m.start() != pos:
            raise ChemError(f"bad formula {text!r}")
        pos = m.end()
        el, digits = m.group(1), m.group(2)
        if not is_element(el):
            raise ChemError(f"unknown element {el!r} in formula")
        if digits and int(digits) == 0:
            raise ChemError(f"zero count for {el!r} in formula")
        counts[el] = counts.get(el, 0) + (int(digits) if digits else 1)
    if pos != len(text):
        raise ChemError(f"bad formula {text!r}")
    return MolecularFormula.from_counts(counts)
