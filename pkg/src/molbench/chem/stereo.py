"""Double-bond geometry from directional bonds, and permutation parity.

Directional single bonds (/ and \\) are positional markers; this module
normalizes them into per-double-bond cis/trans descriptors at parse time so
the writer can re-derive a fresh, consistent slash assignment for any output
atom order.
"""

from __future__ import annotations

from .errors import InvalidStereoError
from .mol import DOUBLE, BondStereo, Molecule

UP, DOWN = 1, -1


def _rel(sym: str, from_atom: int, at_atom: int) -> int:
    """Sign of 'neighbour is up relative to at_atom' for one marked bond.

    A mark X/Y (written from X toward Y) means Y lies up relative to X.
    """
    s = UP if sym == "/" else DOWN
    return s if from_atom == at_atom else -s


def finalize_bond_stereo(
    mol: Molecule, dir_marks: list[tuple[int, str, int]]
) -> None:
    """Turn raw slash marks into BondStereo records on mol."""
    mol.stereo_bonds = []
    if not dir_marks:
        return
    by_bond: dict[int, tuple[str, int]] = {}
    for bi, sym, frm in dir_marks:
        if bi in by_bond:
            continue  # ring closure marked at both ends: complementary by parse
        by_bond[bi] = (sym, frm)

    for di, dbond in enumerate(mol.bonds):
        if dbond.order != DOUBLE or dbond.aromatic:
            continue
        sides = []
        for end in (dbond.a, dbond.b):
            rels: list[tuple[int, int]] = []  # (neighbour atom, rel sign)
            for bi in mol.bond_indices(end):
                if bi == di or bi not in by_bond:
                    continue
                nb = mol.bonds[bi]
                if nb.order != 1 or nb.aromatic:
                    continue
                sym, frm = by_bond[bi]
                rels.append((nb.other(end), _rel(sym, frm, end)))
            rels.sort()
            if len(rels) == 2 and rels[0][1] != -rels[1][1]:
                raise InvalidStereoError(
                    "conflicting directional bonds on one double-bond end"
                )
            if len(rels) > 2:
                raise InvalidStereoError("too many directional bonds")
            sides.append(rels)
        if not sides[0] or not sides[1]:
            continue  # unmarked or half-marked: no geometry recorded
        ref_a, rel_a = sides[0][0]
        ref_b, rel_b = sides[1][0]
        relation = "cis" if rel_a == rel_b else "trans"
        mol.stereo_bonds.append(
            BondStereo(bond=di, ref_a=ref_a, ref_b=ref_b, relation=relation)
        )


def permutation_parity(seq_from: list, seq_to: list) -> int | None:
    """0 if seq_to is an even permutation of seq_from, 1 if odd, else None."""
    if len(seq_from) != len(seq_to):
        return None
    index: dict = {}
    for i, v in enumerate(seq_from):
        if v in index:
            return None
        index[v] = i
    try:
        perm = [index[v] for v in seq_to]
    except KeyError:
        return None
    if len(set(perm)) != len(perm):
        return None
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return inversions % 2
