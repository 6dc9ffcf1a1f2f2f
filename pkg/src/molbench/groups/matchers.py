"""Functional-group matching over parsed molecules.

Groups are defined declaratively in data/groups.json as anchored
neighbourhood patterns: an anchor-atom constraint plus required and
forbidden neighbour rows. Counting anchors keeps matches non-overlapping by
construction. Ring-shaped groups name a built-in matcher instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..chem.mol import Molecule


@dataclass(frozen=True)
class GroupKind:
    tag: str

    def __str__(self) -> str:
        return self.tag


def _atom_matches(mol: Molecule, i: int, spec: dict) -> bool:
    a = mol.atoms[i]
    if "element" in spec and a.element not in spec["element"]:
        return False
    if "aromatic" in spec and a.aromatic != spec["aromatic"]:
        return False
    if "charge" in spec and a.charge != spec["charge"]:
        return False
    if "min_h" in spec and a.total_h < spec["min_h"]:
        return False
    if "max_h" in spec and a.total_h > spec["max_h"]:
        return False
    if "degree" in spec and mol.degree(i) != spec["degree"]:
        return False
    if spec.get("only_single") and any(
        mol.bonds[bi].order != 1 or mol.bonds[bi].aromatic
        for bi in mol.bond_indices(i)
    ):
        return False
    return True


def _double_elements(mol: Molecule, j: int) -> set[str]:
    out = set()
    for bi in mol.bond_indices(j):
        b = mol.bonds[bi]
        if b.order == 2 and not b.aromatic:
            out.add(mol.atoms[b.other(j)].element)
    return out


def _neighbor_matches(mol: Molecule, anchor: int, j: int, row: dict) -> bool:
    bi = mol.bond_between(anchor, j)
    bond = mol.bonds[bi]
    if "order" in row:
        if bond.aromatic or bond.order != row["order"]:
            return False
    elif bond.aromatic:
        return False
    a = mol.atoms[j]
    if "element" in row and a.element not in row["element"]:
        return False
    if "min_h" in row and a.total_h < row["min_h"]:
        return False
    if "max_h" in row and a.total_h > row["max_h"]:
        return False
    if "nbr_max_degree" in row and mol.degree(j) > row["nbr_max_degree"]:
        return False
    if "double_to" in row and not (
        _double_elements(mol, j) & set(row["double_to"])
    ):
        return False
    if "not_double_to" in row and (
        _double_elements(mol, j) & set(row["not_double_to"])
    ):
        return False
    if "attached_to" in row:
        inner = row["attached_to"]
        if not any(
            k != anchor and _atom_matches(mol, k, inner)
            for k in mol.neighbors(j)
        ):
            return False
    return True


def _anchor_matches(mol: Molecule, i: int, entry: dict) -> bool:
    if not _atom_matches(mol, i, entry["anchor"]):
        return False
    nbrs = mol.neighbors(i)
    for row in entry["require"]:
        n = sum(1 for j in nbrs if _neighbor_matches(mol, i, j, row))
        if n < row.get("count_min", 1):
            return False
        if "count_max" in row and n > row["count_max"]:
            return False
    for row in entry["forbid"]:
        if any(_neighbor_matches(mol, i, j, row) for j in nbrs):
            return False
    return True


def _count_aromatic_carbocycle6(mol: Molecule) -> int:
    return sum(
        1
        for ring in mol.sssr()
        if len(ring) == 6
        and all(
            mol.atoms[i].aromatic and mol.atoms[i].element == "C"
            for i in ring
        )
    )


_RING_MATCHERS = {"aromatic_carbocycle6": _count_aromatic_carbocycle6}


def _load_registry() -> dict[str, dict]:
    text = (
        resources.files("molbench.groups")
        .joinpath("data/groups.json")
        .read_text(encoding="utf-8")
    )
    data = json.loads(text)
    registry = {}
    for entry in data["groups"]:
        tag = entry["tag"]
        if tag in registry:
            raise ValueError(f"duplicate group tag {tag!r}")
        if "matcher" not in entry:
            entry.setdefault("require", [])
            entry.setdefault("forbid", [])
        registry[tag] = entry
    return registry


_REGISTRY = _load_registry()

ALL_GROUPS = tuple(GroupKind(tag) for tag in _REGISTRY)
_BY_TAG = {g.tag: g for g in ALL_GROUPS}


def group_of(tag: str) -> GroupKind:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise ValueError(f"unknown functional group: {tag!r}") from None


def count_group(mol: Molecule, group: GroupKind | str) -> int:
    """Number of non-overlapping occurrences of the group."""
    tag = group.tag if isinstance(group, GroupKind) else group
    entry = _REGISTRY.get(tag)
    if entry is None:
        raise ValueError(f"unknown functional group: {tag!r}")
    if "matcher" in entry:
        return _RING_MATCHERS[entry["matcher"]](mol)
    return sum(
        1
        for i in range(len(mol.atoms))
        if _anchor_matches(mol, i, entry)
    )


def count_all(mol: Molecule) -> dict[str, int]:
    return {g.tag: count_group(mol, g) for g in ALL_GROUPS}


__all__ = ["GroupKind", "ALL_GROUPS", "group_of", "count_group", "count_all"]
