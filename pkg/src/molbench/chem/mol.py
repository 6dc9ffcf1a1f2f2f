"""Molecular graph: atoms, bonds, rings, and perception results."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ChemError

# Bond orders are small ints; aromatic bonds additionally carry a flag so the
# kekule order stays available for valence arithmetic.
SINGLE, DOUBLE, TRIPLE, QUADRUPLE = 1, 2, 3, 4


@dataclass
class Atom:
    element: str
    charge: int = 0
    isotope: int | None = None
    # Hydrogen bookkeeping. explicit_h is the bracket-stated count (None for
    # organic-subset atoms, which infer), folded_h counts [H] neighbour nodes
    # folded into this atom, implicit_h is filled from the valence table.
    explicit_h: int | None = None
    folded_h: int = 0
    implicit_h: int = 0
    aromatic_input: bool = False
    aromatic: bool = False
    chirality: str | None = None  # '@' or '@@'

    @property
    def total_h(self) -> int:
        return (self.explicit_h or 0) + self.folded_h + self.implicit_h

    @property
    def bracket_h(self) -> int:
        return (self.explicit_h or 0) + self.folded_h


@dataclass
class Bond:
    a: int
    b: int
    order: int = SINGLE
    aromatic: bool = False

    def other(self, idx: int) -> int:
        if idx == self.a:
            return self.b
        if idx == self.b:
            return self.a
        raise ChemError("atom not on bond")


@dataclass
class BondStereo:
    """Geometry of one double bond: reference neighbours and their relation."""

    bond: int          # bond index of the double bond
    ref_a: int         # neighbour atom index on the .a side
    ref_b: int         # neighbour atom index on the .b side
    relation: str      # 'cis' (same side) or 'trans'

    def relation_for(self, ref_a2: int, ref_b2: int, mol: "Molecule") -> str:
        """Relation re-expressed for a different reference pair."""
        flips = 0
        if ref_a2 != self.ref_a:
            flips += 1
        if ref_b2 != self.ref_b:
            flips += 1
        if flips % 2 == 0:
            return self.relation
        return "trans" if self.relation == "cis" else "cis"


class Molecule:
    """Undirected molecular graph with perception results attached."""

    def __init__(self) -> None:
        self.atoms: list[Atom] = []
        self.bonds: list[Bond] = []
        self._adj: list[list[int]] = []  # atom idx -> bond indices, insertion order
        # Parse-order neighbour lists for chirality-tagged atoms. Entries are
        # atom indices or the string 'H' for the in-bracket hydrogen.
        self.chiral_order: dict[int, list[object]] = {}
        self.stereo_bonds: list[BondStereo] = []
        self._sssr: list[list[int]] | None = None

    # -- construction -----------------------------------------------------

    def add_atom(self, atom: Atom) -> int:
        self.atoms.append(atom)
        self._adj.append([])
        self._sssr = None
        return len(self.atoms) - 1

    def add_bond(self, a: int, b: int, order: int = SINGLE) -> int:
        if a == b:
            raise ChemError("self-bond")
        if self.bond_between(a, b) is not None:
            raise ChemError("duplicate bond between same atom pair")
        self.bonds.append(Bond(a, b, order))
        idx = len(self.bonds) - 1
        self._adj[a].append(idx)
        self._adj[b].append(idx)
        self._sssr = None
        return idx

    # -- queries ----------------------------------------------------------

    def bond_indices(self, atom: int) -> list[int]:
        return self._adj[atom]

    def neighbors(self, atom: int) -> list[int]:
        return [self.bonds[i].other(atom) for i in self._adj[atom]]

    def degree(self, atom: int) -> int:
        return len(self._adj[atom])

    def bond_between(self, a: int, b: int) -> int | None:
        for i in self._adj[a]:
            if self.bonds[i].other(a) == b:
                return i
        return None

    def bond_order_sum(self, atom: int) -> int:
        return sum(self.bonds[i].order for i in self._adj[atom])

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out: list[list[int]] = []
        for start in range(len(self.atoms)):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                cur = stack.pop()
                comp.append(cur)
                for nbr in self.neighbors(cur):
                    if nbr not in seen:
                        seen.add(nbr)
                        stack.append(nbr)
            out.append(sorted(comp))
        return out

    # -- rings ------------------------------------------------------------

    def ring_bonds(self) -> set[int]:
        """Bond indices that lie on at least one cycle (non-bridges)."""
        # Bridge detection via DFS low-link, iterative to dodge recursion
        # limits on long chains.
        n = len(self.atoms)
        visited = [False] * n
        disc = [0] * n
        low = [0] * n
        bridges: set[int] = set()
        timer = 0
        for root in range(n):
            if visited[root]:
                continue
            stack: list[tuple[int, int, int]] = [(root, -1, 0)]
            order: list[tuple[int, int]] = []
            while stack:
                node, parent_bond, state = stack.pop()
                if state == 0:
                    if visited[node]:
                        continue
                    visited[node] = True
                    disc[node] = low[node] = timer
                    timer += 1
                    stack.append((node, parent_bond, 1))
                    for bi in self._adj[node]:
                        if bi == parent_bond:
                            continue
                        nbr = self.bonds[bi].other(node)
                        if not visited[nbr]:
                            order.append((node, bi))
                            stack.append((nbr, bi, 0))
                        else:
                            low[node] = min(low[node], disc[nbr])
                else:
                    if parent_bond != -1:
                        parent = self.bonds[parent_bond].other(node)
                        low[parent] = min(low[parent], low[node])
                        if low[node] > disc[parent]:
                            bridges.add(parent_bond)
            _ = order
        return {i for i in range(len(self.bonds)) if i not in bridges}

    def sssr(self) -> list[list[int]]:
        """Smallest set of smallest rings, as atom index lists in ring order.

        Candidate rings are the shortest cycles through each cyclic bond; a
        greedy smallest-first pass keeps a GF(2)-independent basis of size
        (bonds - atoms + components). Deterministic by construction.
        """
        if self._sssr is not None:
            return self._sssr
        ring_bond_set = self.ring_bonds()
        n_rings_needed = len(self.bonds) - len(self.atoms) + len(self.components())
        if n_rings_needed <= 0 or not ring_bond_set:
            self._sssr = []
            return self._sssr

        candidates: dict[frozenset[int], list[int]] = {}
        for bi in sorted(ring_bond_set):
            bond = self.bonds[bi]
            path = self._shortest_path(bond.a, bond.b, skip_bond=bi)
            if path is None:
                continue
            ring_atoms = path  # a ... b, closing bond bi completes the cycle
            bond_ids = []
            for i in range(len(ring_atoms)):
                j = (i + 1) % len(ring_atoms)
                bid = self.bond_between(ring_atoms[i], ring_atoms[j])
                bond_ids.append(bid)
            key = frozenset(bond_ids)
            if key not in candidates:
                candidates[key] = ring_atoms

        ordered = sorted(
            candidates.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))
        )
        basis: list[int] = []  # bitmask per kept ring
        rings: list[list[int]] = []
        for key, ring_atoms in ordered:
            vec = 0
            for bid in key:
                vec |= 1 << bid
            cur = vec
            for b in basis:
                cur = min(cur, cur ^ b)
            if cur != 0:
                basis.append(vec)
                self._reduce_basis(basis)
                rings.append(ring_atoms)
            if len(rings) == n_rings_needed:
                break
        self._sssr = rings
        return rings

    @staticmethod
    def _reduce_basis(basis: list[int]) -> None:
        # Keep vectors in echelon-ish form so independence checks are cheap.
        basis.sort(reverse=True)

    def _shortest_path(self, a: int, b: int, skip_bond: int) -> list[int] | None:
        from collections import deque

        prev: dict[int, int] = {a: -1}
        queue = deque([a])
        while queue:
            cur = queue.popleft()
            if cur == b:
                path = [b]
                while prev[path[-1]] != -1:
                    path.append(prev[path[-1]])
                return list(reversed(path))
            for bi in self._adj[cur]:
                if bi == skip_bond:
                    continue
                nbr = self.bonds[bi].other(cur)
                if nbr not in prev:
                    prev[nbr] = cur
                    queue.append(nbr)
        return None

    def rings_of_atom(self, atom: int) -> list[list[int]]:
        return [r for r in self.sssr() if atom in r]

    def _ring_bond_cache(self) -> set[int]:
        if not hasattr(self, "_ring_bonds_memo"):
            self._ring_bonds_memo = self.ring_bonds()
        return self._ring_bonds_memo

    def atom_in_ring(self, atom: int) -> bool:
        rb = self._ring_bond_cache()
        return any(bi in rb for bi in self._adj[atom])

    def bond_in_ring(self, bond: int) -> bool:
        return bond in self._ring_bond_cache()

    def invalidate_ring_cache(self) -> None:
        self._sssr = None
        if hasattr(self, "_ring_bonds_memo"):
            del self._ring_bonds_memo
