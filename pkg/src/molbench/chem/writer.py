"""SMILES writer: deterministic rendering for any atom priority order.

One machinery serves both canonical output (priorities = canonical ranks) and
randomized re-rooted renderings (priorities drawn from an RNG). Tetrahedral
tags are re-oriented by permutation parity between the parse-order neighbour
list and the written order; double-bond slashes are re-derived from stored
cis/trans descriptors with a parity-propagation pass, so stereochemistry
survives any traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import ORGANIC_SUBSET
from .errors import ChemError, InvalidStereoError
from .mol import DOUBLE, Molecule
from .aromatics import written_hydrogen_count
from .stereo import permutation_parity

_LOWERCASE_BARE = {"B", "C", "N", "O", "P", "S"}
_ORDER_SYM = {1: "-", 2: "=", 3: "#", 4: "$"}


@dataclass
class _Node:
    atom: int
    parent: int | None
    parent_bond: int | None
    preorder: int
    backs: list[tuple[int, int]] = field(default_factory=list)
    children: list["_Node"] = field(default_factory=list)


def render_component(
    mol: Molecule,
    comp: list[int],
    priority: dict[int, int],
    root: int,
    stereo: bool = True,
    orbit_rank: dict[int, int] | None = None,
) -> str:
    """Render one connected component rooted at `root`.

    `priority` orders neighbour traversal (lower first). `orbit_rank`, when
    given, supplies symmetry classes used to drop degenerate stereo markers
    (canonical mode); None keeps all parseable stereo (randomized mode).
    """
    nodes = _build_tree(mol, comp, priority, root)
    slashes = (
        _assign_slashes(mol, nodes, orbit_rank) if stereo else {}
    )
    kept_chiral = (
        _kept_chiral(mol, orbit_rank) if orbit_rank is not None else None
    )
    text: list[str] = []
    open_labels: dict[int, str] = {}
    used_labels: set[int] = set()

    def next_label() -> str:
        n = 1
        while n in used_labels:
            n += 1
        if n > 99:
            raise ChemError("too many simultaneous ring bonds")
        used_labels.add(n)
        return str(n) if n <= 9 else f"%{n:02d}"

    def bond_text(bi: int, site_atom: int) -> str:
        bond = mol.bonds[bi]
        if bi in slashes:
            return slashes[bi]
        if bond.aromatic:
            return ""
        if bond.order == 1:
            a, b = mol.atoms[bond.a], mol.atoms[bond.b]
            return "-" if (a.aromatic and b.aromatic) else ""
        return _ORDER_SYM[bond.order]

    def emit(node: _Node) -> None:
        text.append(_atom_token(mol, node, stereo, kept_chiral))
        for bi, partner in node.backs:
            if bi not in open_labels:
                label = next_label()
                open_labels[bi] = label
                text.append(label)
            else:
                label = open_labels.pop(bi)
                text.append(bond_text(bi, node.atom))
                text.append(label)
                num = int(label[1:] if label.startswith("%") else label)
                used_labels.discard(num)
        for i, child in enumerate(node.children):
            last = i == len(node.children) - 1
            btxt = bond_text(child.parent_bond, node.atom)
            if last:
                text.append(btxt)
                emit(child)
            else:
                text.append("(")
                text.append(btxt)
                emit(child)
                text.append(")")

    emit(nodes[root])
    return "".join(text)


def _build_tree(
    mol: Molecule, comp: list[int], priority: dict[int, int], root: int
) -> dict[int, _Node]:
    nodes: dict[int, _Node] = {}
    back_bonds: set[int] = set()
    counter = 0

    def visit(atom: int, parent: int | None, parent_bond: int | None) -> _Node:
        nonlocal counter
        node = _Node(atom, parent, parent_bond, counter)
        counter += 1
        nodes[atom] = node
        for bi in sorted(
            mol.bond_indices(atom),
            key=lambda b: priority[mol.bonds[b].other(atom)],
        ):
            if bi == parent_bond:
                continue
            nbr = mol.bonds[bi].other(atom)
            if nbr in nodes:
                if bi not in back_bonds:
                    back_bonds.add(bi)
            else:
                node.children.append(visit(nbr, atom, bi))
        return node

    visit(root, None, None)
    for atom, node in nodes.items():
        incident = [
            (bi, mol.bonds[bi].other(atom))
            for bi in mol.bond_indices(atom)
            if bi in back_bonds
        ]
        incident.sort(key=lambda t: priority[t[1]])
        node.backs = incident
    return nodes


def _atom_token(
    mol: Molecule,
    node: _Node,
    stereo: bool,
    kept_chiral: set[int] | None,
) -> str:
    atom = mol.atoms[node.atom]
    symbol = atom.element.lower() if atom.aromatic else atom.element

    tag = _chirality_tag(mol, node, kept_chiral) if stereo else None

    bracket = (
        atom.isotope is not None
        or atom.charge != 0
        or tag is not None
        or atom.element not in ORGANIC_SUBSET
        or (atom.aromatic and atom.element not in _LOWERCASE_BARE)
    )
    if not bracket:
        nonarom = sum(
            mol.bonds[bi].order
            for bi in mol.bond_indices(node.atom)
            if not mol.bonds[bi].aromatic
        )
        n_arom = sum(
            1 for bi in mol.bond_indices(node.atom) if mol.bonds[bi].aromatic
        )
        has_exo = any(
            mol.bonds[bi].order >= DOUBLE and not mol.bonds[bi].aromatic
            for bi in mol.bond_indices(node.atom)
        )
        inferred = written_hydrogen_count(
            atom.element,
            0,
            mol.degree(node.atom),
            nonarom,
            n_arom if atom.aromatic else 0,
            has_exo,
        )
        if inferred != atom.total_h:
            bracket = True
    if not bracket:
        return symbol

    parts = ["["]
    if atom.isotope is not None:
        parts.append(str(atom.isotope))
    parts.append(symbol)
    if tag is not None:
        parts.append(tag)
    h = atom.total_h
    if h == 1:
        parts.append("H")
    elif h > 1:
        parts.append(f"H{h}")
    if atom.charge == 1:
        parts.append("+")
    elif atom.charge == -1:
        parts.append("-")
    elif atom.charge > 1:
        parts.append(f"+{atom.charge}")
    elif atom.charge < -1:
        parts.append(str(atom.charge))
    parts.append("]")
    return "".join(parts)


def _written_neighbor_order(mol: Molecule, node: _Node) -> list[object]:
    entries: list[object] = []
    if node.parent is not None:
        entries.append(node.parent)
    if mol.atoms[node.atom].total_h == 1:
        entries.append("H")
    for _, partner in node.backs:
        entries.append(partner)
    for child in node.children:
        entries.append(child.atom)
    return entries


def _chirality_tag(
    mol: Molecule, node: _Node, kept_chiral: set[int] | None
) -> str | None:
    atom = mol.atoms[node.atom]
    if atom.chirality is None or node.atom not in mol.chiral_order:
        return None
    if atom.total_h > 1:
        return None
    if kept_chiral is not None and node.atom not in kept_chiral:
        return None
    stored = mol.chiral_order[node.atom]
    written = _written_neighbor_order(mol, node)
    parity = permutation_parity(stored, written)
    if parity is None:
        return None
    if parity == 0:
        return atom.chirality
    return "@@" if atom.chirality == "@" else "@"


def _ring_system_ids(mol: Molecule) -> dict[int, int]:
    """Connected components of the ring-bond subgraph, as atom -> system id."""
    rb = mol.ring_bonds()
    ids: dict[int, int] = {}
    next_id = 0
    for start in range(len(mol.atoms)):
        if start in ids or not any(bi in rb for bi in mol.bond_indices(start)):
            continue
        stack = [start]
        ids[start] = next_id
        while stack:
            v = stack.pop()
            for bi in mol.bond_indices(v):
                if bi not in rb:
                    continue
                u = mol.bonds[bi].other(v)
                if u not in ids:
                    ids[u] = next_id
                    stack.append(u)
        next_id += 1
    return ids


def _kept_chiral(mol: Molecule, orbit_rank: dict[int, int]) -> set[int]:
    """Tagged atoms whose tags survive canonical output.

    A tag with all neighbour ranks distinct is a plain stereocentre. When two
    neighbours share a rank the tag is usually redundant (swapping them is a
    symmetry), except for ring stereo: tied neighbours reached through ring
    bonds can still encode cis/trans placement relative to another marker in
    the same ring system, so those survive when such a partner exists.
    """
    # orbit_rank only covers the component being rendered; tags elsewhere
    # in a multi-fragment molecule belong to other render calls
    tagged = [
        i
        for i, a in enumerate(mol.atoms)
        if a.chirality is not None
        and i in mol.chiral_order
        and a.total_h <= 1
        and i in orbit_rank
    ]
    keep: set[int] = set()
    ring_tied: list[int] = []
    for v in tagged:
        nbrs = mol.neighbors(v)
        ranks = [orbit_rank[n] for n in nbrs]
        if mol.atoms[v].total_h == 1:
            ranks.append(-1)  # the hydrogen
        if len(set(ranks)) == len(ranks):
            keep.add(v)
            continue
        by_rank: dict[int, list[int]] = {}
        for n in nbrs:
            by_rank.setdefault(orbit_rank[n], []).append(n)
        tied_through_rings = True
        for group in by_rank.values():
            if len(group) < 2:
                continue
            for n in group:
                bi = mol.bond_between(v, n)
                if bi is None or not mol.bond_in_ring(bi):
                    tied_through_rings = False
        if tied_through_rings:
            ring_tied.append(v)
    if ring_tied:
        system = _ring_system_ids(mol)
        tag_count: dict[int, int] = {}
        for v in keep | set(ring_tied):
            sid = system.get(v)
            if sid is not None:
                tag_count[sid] = tag_count.get(sid, 0) + 1
        for v in ring_tied:
            sid = system.get(v)
            if sid is not None and tag_count.get(sid, 0) >= 2:
                keep.add(v)
    return keep


class _ParityUnion:
    """Union-find tracking a parity bit relative to each set root."""

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}
        self.parity: dict[int, int] = {}

    def add(self, x: int) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0

    def find(self, x: int) -> tuple[int, int]:
        if self.parent[x] == x:
            return x, 0
        root, p = self.find(self.parent[x])
        self.parent[x] = root
        self.parity[x] ^= p
        return root, self.parity[x]

    def union(self, x: int, y: int, rel: int) -> None:
        """Join with constraint parity(x) xor parity(y) == rel."""
        self.add(x)
        self.add(y)
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if px ^ py != rel:
                raise InvalidStereoError("contradictory double-bond geometry")
            return
        self.parent[rx] = ry
        self.parity[rx] = px ^ py ^ rel


def _assign_slashes(
    mol: Molecule,
    nodes: dict[int, _Node],
    orbit_rank: dict[int, int] | None,
) -> dict[int, str]:
    """Choose '/' or '\\' per marked single bond for this emission order."""
    kept = []
    for sb in mol.stereo_bonds:
        if mol.bonds[sb.bond].a not in nodes:
            continue  # different component
        if orbit_rank is not None and _stereo_degenerate(mol, sb, orbit_rank):
            continue
        kept.append(sb)
    if not kept:
        return {}

    # writing site: tree bonds are written at the child, back bonds at the
    # atom with the larger preorder (the closing digit). The slash variable is
    # the character as read from that site's first-written atom.
    site_from: dict[int, int] = {}
    order_key: dict[int, tuple[int, int, int]] = {}
    for atom, node in nodes.items():
        if node.parent_bond is not None:
            site_from[node.parent_bond] = node.parent
            order_key[node.parent_bond] = (node.preorder, 0, 0)
        for pos, (bi, partner) in enumerate(node.backs):
            pn = nodes[partner]
            if node.preorder > pn.preorder:  # this end writes the closure
                site_from[bi] = node.atom
                order_key[bi] = (node.preorder, 1, pos)

    marked: set[int] = set()
    for sb in kept:
        bond = mol.bonds[sb.bond]
        for end in (bond.a, bond.b):
            for bi in mol.bond_indices(end):
                nb = mol.bonds[bi]
                if bi != sb.bond and nb.order == 1 and not nb.aromatic:
                    marked.add(bi)

    def sigma(bi: int, at_atom: int) -> int:
        # +1 when the slash is read outward from at_atom
        return 1 if site_from[bi] == at_atom else -1

    uf = _ParityUnion()
    for bi in marked:
        uf.add(bi)
    for sb in kept:
        bond = mol.bonds[sb.bond]
        ends = (bond.a, bond.b)
        side_bonds: list[list[int]] = []
        for end in ends:
            bs = sorted(
                (
                    bi
                    for bi in mol.bond_indices(end)
                    if bi in marked and bi != sb.bond
                ),
                key=lambda bi: order_key[bi],
            )
            side_bonds.append(bs)
            if len(bs) == 2:
                # the two substituents on one end point opposite ways
                s1 = sigma(bs[0], end)
                s2 = sigma(bs[1], end)
                uf.union(bs[0], bs[1], 0 if s1 != s2 else 1)
        if not side_bonds[0] or not side_bonds[1]:
            continue
        ba, bb = side_bonds[0][0], side_bonds[1][0]
        ref_a2 = mol.bonds[ba].other(ends[0])
        ref_b2 = mol.bonds[bb].other(ends[1])
        relation = sb.relation_for(ref_a2, ref_b2, mol)
        want_equal = relation == "cis"
        s1 = sigma(ba, ends[0])
        s2 = sigma(bb, ends[1])
        # rel_a == rel_b  <=>  s1*V1 == s2*V2
        rel = 0 if (s1 == s2) == want_equal else 1
        uf.union(ba, bb, rel)

    out: dict[int, str] = {}
    root_char: dict[int, int] = {}
    for bi in sorted(marked, key=lambda b: order_key[b]):
        root, parity = uf.find(bi)
        if root not in root_char:
            root_char[root] = parity  # first bond in written order gets '/'
        char_bit = parity ^ root_char[root]
        out[bi] = "/" if char_bit == 0 else "\\"
    return out


def _stereo_degenerate(mol, sb, orbit_rank) -> bool:
    bond = mol.bonds[sb.bond]
    for end in (bond.a, bond.b):
        nbrs = [n for n in mol.neighbors(end) if n != bond.other(end)]
        if len(nbrs) == 2 and orbit_rank[nbrs[0]] == orbit_rank[nbrs[1]]:
            return True
    return False


def random_priorities(mol: Molecule, rng) -> dict[int, int]:
    idxs = list(range(len(mol.atoms)))
    rng.shuffle(idxs)
    return {atom: i for i, atom in enumerate(idxs)}


def write_random(mol: Molecule, rng, stereo: bool = True) -> str:
    """One randomized rendering: random component order, roots, traversal."""
    priority = random_priorities(mol, rng)
    comps = mol.components()
    rng.shuffle(comps)
    parts = []
    for comp in comps:
        root = rng.choice(comp)
        parts.append(
            render_component(mol, comp, priority, root, stereo=stereo)
        )
    return ".".join(parts)


__all__ = ["render_component", "write_random", "random_priorities"]
