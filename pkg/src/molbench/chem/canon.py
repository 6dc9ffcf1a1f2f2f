"""Canonical SMILES via iterative invariant refinement and min-string search.

Atoms start from local invariants, are refined by neighbour rank multisets
until stable (an equitable partition), and remaining ties are broken by
exploring every individualization of the first ambiguous cell. The canonical
string is the lexicographic minimum over the rendered candidates, which makes
the result independent of input atom order by construction.
"""

from __future__ import annotations

from .elements import atomic_number
from .errors import ChemError
from .mol import Molecule
from .writer import render_component

# Ceiling on tie-break leaves; chemistry-sized symmetry never gets close.
_MAX_LEAVES = 8192


def _initial_invariants(mol: Molecule, comp: list[int]) -> dict[int, tuple]:
    inv = {}
    for idx in comp:
        atom = mol.atoms[idx]
        inv[idx] = (
            atomic_number(atom.element),
            mol.degree(idx),
            atom.total_h,
            atom.charge,
            atom.isotope or 0,
            1 if atom.aromatic else 0,
        )
    return inv


def _bond_code(mol: Molecule, bi: int) -> int:
    bond = mol.bonds[bi]
    return 5 if bond.aromatic else bond.order


def _dense(values: dict[int, object]) -> dict[int, int]:
    order = sorted(set(values.values()))
    lookup = {v: i for i, v in enumerate(order)}
    return {k: lookup[v] for k, v in values.items()}


def _refine(mol: Molecule, comp: list[int], ranks: dict[int, int]) -> dict[int, int]:
    while True:
        sig: dict[int, tuple] = {}
        for idx in comp:
            nbrs = tuple(
                sorted(
                    (_bond_code(mol, bi), ranks[mol.bonds[bi].other(idx)])
                    for bi in mol.bond_indices(idx)
                )
            )
            sig[idx] = (ranks[idx], nbrs)
        new = _dense(sig)
        if new == ranks:
            return ranks
        ranks = new


def refined_partition(mol: Molecule, comp: list[int]) -> dict[int, int]:
    """Equitable partition ranks (symmetry-class approximation)."""
    return _refine(mol, comp, _dense(_initial_invariants(mol, comp)))


def _individualize(
    mol: Molecule, comp: list[int], ranks: dict[int, int], atom: int
) -> dict[int, int]:
    bumped = {
        idx: (r, 0 if idx == atom else 1) if r == ranks[atom] else (r, 1)
        for idx, r in ranks.items()
    }
    return _refine(mol, comp, _dense(bumped))


def _discrete_rankings(mol: Molecule, comp: list[int]):
    """Yield every fully-resolved ranking reachable by first-cell splits."""
    leaves = 0

    def walk(ranks: dict[int, int]):
        nonlocal leaves
        cells: dict[int, list[int]] = {}
        for idx in comp:
            cells.setdefault(ranks[idx], []).append(idx)
        tied = [r for r, members in cells.items() if len(members) > 1]
        if not tied:
            leaves += 1
            if leaves > _MAX_LEAVES:
                raise ChemError("canonical tie-break explosion")
            yield ranks
            return
        cell = cells[min(tied)]
        for atom in sorted(cell):
            yield from walk(_individualize(mol, comp, ranks, atom))

    yield from walk(refined_partition(mol, comp))


def canonical_component(mol: Molecule, comp: list[int], stereo: bool = True) -> str:
    orbit = refined_partition(mol, comp)
    best: str | None = None
    for ranks in _discrete_rankings(mol, comp):
        root = min(comp, key=lambda idx: ranks[idx])
        text = render_component(
            mol, comp, ranks, root, stereo=stereo, orbit_rank=orbit
        )
        if best is None or text < best:
            best = text
    assert best is not None
    return best


def canonical_smiles_of(mol: Molecule, stereo: bool = True) -> str:
    parts = [
        canonical_component(mol, comp, stereo=stereo)
        for comp in mol.components()
    ]
    return ".".join(sorted(parts))
