"""Kekulization and aromaticity perception.

Input aromatic flags (lowercase atoms) are a claim: the reader first converts
the aromatic subgraph to an explicit alternating-bond form (kekulization as a
perfect matching), then re-perceives aromaticity from electron counts. A
molecule whose written-aromatic atoms do not land in a perceived-aromatic ring
is rejected, so 'c1ccc1' fails while 'c1ccccc1' and 'C1=CC=CC=C1' converge to
the same perceived state.
"""

from __future__ import annotations

from .elements import allowed_valences
from .errors import KekulizationError, ValenceError
from .mol import DOUBLE, Molecule

# Ring elements considered by perception.
PERCEIVE_ELEMENTS = {"C", "N", "O", "S"}


def needs_ring_double(
    element: str,
    charge: int,
    connections: int,
    hydrogens: int,
    has_exo_double: bool,
) -> bool:
    """Whether a written-aromatic atom must receive one in-ring double bond.

    `connections` counts bonded neighbours (ring and substituent),
    `hydrogens` the bracket-stated hydrogen count.
    """
    if has_exo_double:
        return False
    if element == "B":
        return False
    if element == "C":
        return charge == 0
    if element in ("N", "P", "As"):
        if charge == 0:
            return connections + hydrogens == 2
        if charge == 1:
            return connections + hydrogens == 3
        return False
    if element in ("O", "S", "Se", "Te"):
        return charge == 1 and connections == 2
    return False


def kekulize(mol: Molecule, aromatic_bond_idx: set[int]) -> None:
    """Assign alternating double bonds over the written-aromatic subgraph.

    Bonds in `aromatic_bond_idx` currently have order 1; matched pairs are
    promoted to order 2. Raises KekulizationError when no perfect matching
    over the atoms that need a double bond exists.
    """
    if not aromatic_bond_idx:
        return
    needs: set[int] = set()
    arom_atoms: set[int] = set()
    for bi in aromatic_bond_idx:
        bond = mol.bonds[bi]
        arom_atoms.add(bond.a)
        arom_atoms.add(bond.b)
    for idx in arom_atoms:
        atom = mol.atoms[idx]
        has_exo = any(
            mol.bonds[bi].order >= DOUBLE and bi not in aromatic_bond_idx
            for bi in mol.bond_indices(idx)
        )
        if needs_ring_double(
            atom.element, atom.charge, mol.degree(idx), atom.bracket_h, has_exo
        ):
            needs.add(idx)

    # candidate edges: aromatic bonds joining two atoms that both need a double
    cand: dict[int, list[int]] = {idx: [] for idx in needs}
    for bi in sorted(aromatic_bond_idx):
        bond = mol.bonds[bi]
        if bond.a in needs and bond.b in needs:
            cand[bond.a].append(bi)
            cand[bond.b].append(bi)

    matching = _perfect_matching(mol, needs, cand)
    if matching is None:
        raise KekulizationError("unkekulizable aromatic system")
    for bi in matching:
        mol.bonds[bi].order = DOUBLE


def _perfect_matching(
    mol: Molecule, needs: set[int], cand: dict[int, list[int]]
) -> set[int] | None:
    """Backtracking perfect matching covering every atom in `needs`."""

    def solve(uncovered: set[int], used: set[int]) -> set[int] | None:
        if not uncovered:
            return used
        # Most-constrained atom first keeps the search shallow.
        pick = min(
            uncovered,
            key=lambda idx: (
                sum(
                    1
                    for bi in cand[idx]
                    if mol.bonds[bi].other(idx) in uncovered
                ),
                idx,
            ),
        )
        options = [
            bi for bi in cand[pick] if mol.bonds[bi].other(pick) in uncovered
        ]
        if not options:
            return None
        for bi in options:
            other = mol.bonds[bi].other(pick)
            result = solve(uncovered - {pick, other}, used | {bi})
            if result is not None:
                return result
        return None

    return solve(set(needs), set())


def assign_implicit_hydrogens(mol: Molecule) -> None:
    """Fill implicit H on organic-subset atoms; valence-check bracket atoms."""
    for idx, atom in enumerate(mol.atoms):
        order_sum = mol.bond_order_sum(idx) + atom.folded_h
        if atom.explicit_h is None:
            valences = allowed_valences(atom.element, atom.charge)
            assert valences is not None  # organic subset is always covalent
            fill = None
            for v in valences:
                if v >= order_sum:
                    fill = v - order_sum
                    break
            if fill is None:
                raise ValenceError(
                    f"{atom.element} with bond order sum {order_sum} exceeds "
                    f"allowed valences {valences}"
                )
            atom.implicit_h = fill
        else:
            atom.implicit_h = 0
            total = order_sum + atom.explicit_h
            valences = allowed_valences(atom.element, atom.charge)
            if valences is not None and total not in valences:
                raise ValenceError(
                    f"[{atom.element}] valence {total} not in allowed "
                    f"{valences} (charge {atom.charge:+d})"
                )


def perceive_aromaticity(mol: Molecule) -> None:
    """Mark aromatic atoms/bonds by Huckel counting over SSSR rings.

    Counts are layout-independent: a double bond leaving a ring contributes
    only when it is itself an edge of another candidate ring (the fused
    alternating layouts of naphthalene and friends), so every written form
    of the same molecule converges to the same flags in one sweep.
    """
    for atom in mol.atoms:
        atom.aromatic = False
    for bond in mol.bonds:
        bond.aromatic = False

    rings = [r for r in mol.sssr() if _ring_eligible(mol, r)]
    ring_edges = {
        frozenset((r[i], r[(i + 1) % len(r)])) for r in rings for i in range(len(r))
    }
    for ring in rings:
        pi = _ring_pi_count(mol, ring, ring_edges)
        if pi is None or pi % 4 != 2:
            continue
        for idx in ring:
            mol.atoms[idx].aromatic = True
        for i in range(len(ring)):
            j = (i + 1) % len(ring)
            bi = mol.bond_between(ring[i], ring[j])
            if bi is not None:
                mol.bonds[bi].aromatic = True


def _ring_eligible(mol: Molecule, ring: list[int]) -> bool:
    return all(mol.atoms[i].element in PERCEIVE_ELEMENTS for i in ring)


def _ring_pi_count(
    mol: Molecule, ring: list[int], ring_edges: set[frozenset[int]]
) -> int | None:
    """Pi electrons the ring atoms contribute, or None if not aromatizable."""
    ring_set = set(ring)
    total = 0
    for idx in ring:
        atom = mol.atoms[idx]
        if mol.degree(idx) + atom.total_h > 3:
            return None  # saturated centre
        in_ring_double = False
        exo_double_partner: int | None = None
        for bi in mol.bond_indices(idx):
            bond = mol.bonds[bi]
            if bond.order == 3 or bond.order == 4:
                return None
            if bond.order == DOUBLE:
                other = bond.other(idx)
                if other in ring_set:
                    in_ring_double = True
                else:
                    exo_double_partner = other
        if in_ring_double:
            total += 1
        elif exo_double_partner is not None:
            # A double bond pointing out of this ring counts only when it is
            # a ring edge of another candidate ring (fused alternating
            # layouts); a true exocyclic double (carbonyl) contributes none.
            edge = frozenset((idx, exo_double_partner))
            total += 1 if edge in ring_edges else 0
        else:
            contrib = _lone_pair_contribution(atom)
            if contrib is None:
                return None
            total += contrib
    return total


def _lone_pair_contribution(atom) -> int | None:
    el, chg = atom.element, atom.charge
    if el == "C":
        if chg == -1:
            return 2
        if chg == 1:
            return 0
        return None
    if el == "N":
        if chg == 0 or chg == -1:
            return 2
        return None
    if el in ("O", "S"):
        if chg == 0:
            return 2
        if chg == 1:
            return 2  # three-coordinate onium donor
        return None
    return None


def check_aromatic_claims(mol: Molecule) -> None:
    """Reject inputs whose lowercase atoms did not perceive as aromatic."""
    for idx, atom in enumerate(mol.atoms):
        if atom.aromatic_input and not atom.aromatic:
            raise KekulizationError(
                f"atom {idx} ({atom.element}) written aromatic but no "
                "aromatic ring supports it"
            )


def written_hydrogen_count(
    element: str,
    charge: int,
    connections: int,
    nonaromatic_order_sum: int,
    aromatic_bond_count: int,
    has_exo_double: bool,
) -> int | None:
    """Hydrogens a reader would infer for a bare organic-subset token.

    Mirrors the reader pipeline: classify the hypothetical token's ring-double
    need, total the bond orders, fill to the smallest allowed valence. None if
    the bond sum exceeds every allowed valence.
    """
    extra = 0
    if aromatic_bond_count:
        extra = (
            1
            if needs_ring_double(element, charge, connections, 0, has_exo_double)
            else 0
        )
    order_sum = nonaromatic_order_sum + aromatic_bond_count + extra
    valences = allowed_valences(element, charge)
    if valences is None:
        return None
    for v in valences:
        if v >= order_sum:
            return v - order_sum
    return None
