"""SMILES and route augmentation by randomized re-rendering.

Variants differ only in notation: every output parses back to the same
molecule as its source (canonical equality), which is what makes them
usable as test-time-scaling inputs. Variant zero is always the canonical
rendering; the rest come from randomized roots and traversal orders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..chem import Molecule, canonical_smiles, canonicalize, parse_smiles
from ..chem.writer import write_random
from .errors import InsufficientVariants
from .routes import RouteTree


@dataclass(frozen=True)
class SmilesVariants:
    """k requested renderings; shortfall counts the ones that don't exist."""

    source: str  # canonical rendering
    texts: tuple[str, ...]
    requested: int

    @property
    def shortfall(self) -> int:
        return self.requested - len(self.texts)


def _as_molecule(mol: Molecule | str) -> Molecule:
    return parse_smiles(mol) if isinstance(mol, str) else mol


def augment_smiles(
    mol: Molecule | str,
    k: int,
    seed: int = 0,
    stereo: bool = True,
    strict: bool = False,
    max_tries_per_variant: int = 30,
) -> SmilesVariants:
    """Up to k syntactically distinct renderings of one molecule.

    Deterministic under (molecule, k, seed). Highly symmetric or tiny
    molecules may admit fewer than k distinct strings; the result then
    carries the shortfall, or raises InsufficientVariants when strict.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    molecule = _as_molecule(mol)
    canon = str(canonicalize(molecule, stereo=stereo))
    rng = random.Random(f"augment:{seed}:{canon}")
    seen: list[str] = [canon]
    budget = max_tries_per_variant * k
    while len(seen) < k and budget > 0:
        budget -= 1
        text = write_random(molecule, rng, stereo=stereo)
        if text not in seen:
            seen.append(text)
    texts = tuple(seen[:k])
    if strict and len(texts) < k:
        raise InsufficientVariants(
            f"{canon}: only {len(texts)} distinct renderings of {k} requested"
        )
    return SmilesVariants(source=canon, texts=texts, requested=k)


@dataclass(frozen=True)
class RouteRendering:
    """One re-rendered route, structurally aligned with its source."""

    target: str
    steps: tuple[tuple[str, tuple[str, ...]], ...]


def augment_route(
    route: RouteTree,
    folds: int,
    seed: int = 0,
    stereo: bool = True,
) -> list[RouteRendering]:
    """folds re-renderings of every molecule in the tree.

    Each fold re-roots the target and independently re-renders each
    product and precursor, keeping step structure aligned with the source
    route; canonical identity of every molecule is preserved by
    construction of the writer.
    """
    if folds < 1:
        raise ValueError("folds must be >= 1")
    rng = random.Random(f"route-augment:{seed}:{route.target}")
    parsed: dict[str, Molecule] = {}

    def rerender(smiles: str) -> str:
        if smiles not in parsed:
            parsed[smiles] = parse_smiles(smiles)
        return write_random(parsed[smiles], rng, stereo=stereo)

    out = []
    for _ in range(folds):
        steps = tuple(
            (
                rerender(product),
                tuple(sorted(rerender(p) for p in precursors)),
            )
            for product, precursors in route.steps
        )
        out.append(RouteRendering(target=steps[0][0], steps=steps))
    return out


def variants_canonical_equal(variants: SmilesVariants,
                             stereo: bool = True) -> bool:
    """Every rendering parses back to the source molecule."""
    return all(
        canonical_smiles(text, stereo=stereo) == variants.source
        for text in variants.texts
    )


__all__ = [
    "SmilesVariants",
    "augment_smiles",
    "RouteRendering",
    "augment_route",
    "variants_canonical_equal",
]
