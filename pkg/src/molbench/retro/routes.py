"""Route trees and canonical precursor sets.

A route is a tree of reactions rooted at the target: each step expands one
product into the set of precursors that make it. Leaves are the starting
materials. All molecule identity inside this module is canonical-SMILES
identity, so renderings never matter.

Route record wire format (one JSON object per line):

    {
      "target": "<smiles>",
      "gold_depth": 2,
      "routes": [
        [ {"product": "<smiles>", "precursors": ["<smiles>", ...]}, ... ],
        ...
      ]
    }

Each route's first step must expand the target; every later step must
expand a molecule introduced as a precursor exactly once before it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from ..chem import ChemError, canonical_smiles
from .errors import RouteFormatError


@dataclass(frozen=True)
class PrecursorSet:
    """An order-free set of starting materials, canonical by construction."""

    members: frozenset[str]

    @classmethod
    def from_smiles(cls, smiles: Iterable[str],
                    stereo: bool = True) -> "PrecursorSet":
        canon = set()
        for s in smiles:
            try:
                canon.add(canonical_smiles(s, stereo=stereo))
            except ChemError as exc:
                raise RouteFormatError(f"bad precursor {s!r}: {exc}") from exc
        if not canon:
            raise RouteFormatError("empty precursor set")
        return cls(frozenset(canon))

    def rendering(self) -> str:
        """Deterministic text form: members sorted and dot-joined."""
        return ".".join(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, smiles: str) -> bool:
        return smiles in self.members


@dataclass(frozen=True)
class RouteTree:
    """A validated reaction tree rooted at the target."""

    target: str
    steps: tuple[tuple[str, frozenset[str]], ...]

    @classmethod
    def from_steps(
        cls,
        target: str,
        steps: Iterable[tuple[str, Iterable[str]]],
        stereo: bool = True,
    ) -> "RouteTree":
        try:
            root = canonical_smiles(target, stereo=stereo)
        except ChemError as exc:
            raise RouteFormatError(f"bad target {target!r}: {exc}") from exc
        canon_steps: list[tuple[str, frozenset[str]]] = []
        for product, precursors in steps:
            try:
                prod = canonical_smiles(product, stereo=stereo)
            except ChemError as exc:
                raise RouteFormatError(
                    f"bad product {product!r}: {exc}"
                ) from exc
            pre = PrecursorSet.from_smiles(precursors, stereo=stereo)
            canon_steps.append((prod, pre.members))
        tree = cls(target=root, steps=tuple(canon_steps))
        tree._validate()
        return tree

    def _validate(self) -> None:
        if not self.steps:
            raise RouteFormatError("a route needs at least one step")
        if self.steps[0][0] != self.target:
            raise RouteFormatError(
                "first step must expand the target molecule"
            )
        expanded: set[str] = set()
        introduced: list[str] = []
        for product, precursors in self.steps:
            if product in expanded:
                raise RouteFormatError(
                    f"molecule expanded twice: {product}"
                )
            if product != self.target and introduced.count(product) != 1:
                raise RouteFormatError(
                    f"step product {product} must appear as a precursor of "
                    "exactly one earlier step"
                )
            expanded.add(product)
            introduced.extend(precursors)

    @property
    def leaves(self) -> PrecursorSet:
        expanded = {product for product, _ in self.steps}
        leaf = set()
        for _, precursors in self.steps:
            leaf.update(p for p in precursors if p not in expanded)
        return PrecursorSet(frozenset(leaf))

    @property
    def depth(self) -> int:
        """Maximum number of reactions from the target down to a leaf."""
        children = {product: precursors for product, precursors in self.steps}

        def walk(mol: str) -> int:
            if mol not in children:
                return 0
            return 1 + max(walk(p) for p in children[mol])

        return walk(self.target)


@dataclass(frozen=True)
class RouteRecord:
    """One benchmark target: the gold routes and the gold depth."""

    target: str
    routes: tuple[RouteTree, ...]
    gold_depth: int

    @property
    def gold_leaf_sets(self) -> list[PrecursorSet]:
        return [route.leaves for route in self.routes]


def route_record_from_dict(obj: dict, stereo: bool = True) -> RouteRecord:
    try:
        target = obj["target"]
        raw_routes = obj["routes"]
        gold_depth = int(obj["gold_depth"])
    except (KeyError, TypeError, ValueError) as exc:
        raise RouteFormatError(f"bad route record: {exc}") from exc
    if gold_depth < 1:
        raise RouteFormatError(f"gold depth must be >= 1, got {gold_depth}")
    routes = []
    for steps in raw_routes:
        pairs = [(s["product"], s["precursors"]) for s in steps]
        routes.append(RouteTree.from_steps(target, pairs, stereo=stereo))
    if not routes:
        raise RouteFormatError("route record without gold routes")
    return RouteRecord(
        target=routes[0].target,
        routes=tuple(routes),
        gold_depth=gold_depth,
    )


def read_route_records(path: Path | str,
                       stereo: bool = True) -> Iterator[RouteRecord]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield route_record_from_dict(json.loads(line), stereo=stereo)


__all__ = [
    "PrecursorSet",
    "RouteTree",
    "RouteRecord",
    "route_record_from_dict",
    "read_route_records",
]
