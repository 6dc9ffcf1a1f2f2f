"""Circular (Morgan-style) fingerprints with stable hashing."""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass

from .elements import atomic_number
from .errors import ChemError
from .mol import Molecule


class DimensionMismatch(ChemError):
    """Fingerprints with different size/radius cannot be compared."""


@dataclass(frozen=True)
class Fingerprint:
    bits: frozenset[int]
    radius: int
    size: int


def _hash64(values: tuple[int, ...]) -> int:
    # values mix small signed invariants and previous unsigned 64-bit ids,
    # so reduce into the unsigned range before packing
    packed = struct.pack(
        f">{len(values)}Q", *(v & 0xFFFFFFFFFFFFFFFF for v in values)
    )
    digest = hashlib.blake2b(packed, digest_size=8).digest()
    return int.from_bytes(digest, "big")


def morgan_fingerprint(
    mol: Molecule, radius: int = 2, size: int = 2048
) -> Fingerprint:
    """Fold radius-layered atom environment identifiers into `size` bits.

    Identifiers are stable 64-bit hashes of (layer, own id, sorted neighbour
    (bond code, id) pairs); platform- and run-independent by construction.
    """
    if radius < 0:
        raise ChemError("radius must be >= 0")
    if size <= 0 or size & (size - 1):
        raise ChemError("size must be a power of two")

    def bond_code(bi: int) -> int:
        bond = mol.bonds[bi]
        return 5 if bond.aromatic else bond.order

    ids: dict[int, int] = {}
    for idx, atom in enumerate(mol.atoms):
        ids[idx] = _hash64(
            (
                0,
                atomic_number(atom.element),
                mol.degree(idx),
                atom.total_h,
                atom.charge,
                atom.isotope or 0,
                1 if atom.aromatic else 0,
                1 if mol.atom_in_ring(idx) else 0,
            )
        )
    features: set[int] = set(ids.values())
    for layer in range(1, radius + 1):
        new_ids: dict[int, int] = {}
        for idx in range(len(mol.atoms)):
            env = sorted(
                (bond_code(bi), ids[mol.bonds[bi].other(idx)])
                for bi in mol.bond_indices(idx)
            )
            flat: list[int] = [layer, ids[idx]]
            for code, nid in env:
                flat.extend((code, nid))
            new_ids[idx] = _hash64(tuple(flat))
        ids = new_ids
        features.update(ids.values())
    return Fingerprint(
        bits=frozenset(f % size for f in features), radius=radius, size=size
    )


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    if a.size != b.size or a.radius != b.radius:
        raise DimensionMismatch(
            f"fingerprint dimensions differ: {a.size}/{a.radius} vs "
            f"{b.size}/{b.radius}"
        )
    union = a.bits | b.bits
    if not union:
        return 0.0
    return len(a.bits & b.bits) / len(union)
