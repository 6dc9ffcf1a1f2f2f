"""SMILES reader: tokenizer, graph assembly, and perception pipeline."""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import stereo as stereo_mod
from .aromatics import (
    assign_implicit_hydrogens,
    check_aromatic_claims,
    kekulize,
    perceive_aromaticity,
)
from .elements import AROMATIC_ELEMENTS, is_element
from .errors import KekulizationError, SmilesSyntaxError
from .mol import Atom, Molecule

_TOKEN_RE = re.compile(
    r"""(?P<bracket>\[[^\]]*\])
      | (?P<organic>Cl|Br|[BCNOPSFI]|[bcnops])
      | (?P<bond>[-=#$:/\\])
      | (?P<ring>%\d{2}|\d)
      | (?P<open>\()
      | (?P<close>\))
      | (?P<dot>\.)
    """,
    re.X,
)

_BRACKET_RE = re.compile(
    r"""\A\[
      (?P<isotope>\d+)?
      (?P<symbol>[A-Z][a-z]?|as|se|te|si|[bcnops])
      (?P<chiral>@@|@)?
      (?P<hcount>H\d*)?
      (?P<charge>\+\d+|-\d+|\++|-+)?
      (?::(?P<map>\d+))?
    \]\Z""",
    re.X,
)

_BOND_ORDERS = {"-": 1, "=": 2, "#": 3, "$": 4, "/": 1, "\\": 1}

# marker object for a not-yet-closed ring bond in a neighbour-order list
_RingSlot = object


@dataclass
class _OpenRing:
    atom: int
    token: str | None
    slot: int
    placeholder: object


def _parse_bracket(text: str, pos: int) -> Atom:
    m = _BRACKET_RE.match(text)
    if m is None:
        raise SmilesSyntaxError(f"malformed bracket atom {text!r}", pos)
    sym = m.group("symbol")
    aromatic = sym[0].islower()
    element = sym.capitalize() if aromatic else sym
    if not is_element(element):
        raise SmilesSyntaxError(f"unknown element {element!r}", pos)
    if aromatic and element not in AROMATIC_ELEMENTS:
        raise SmilesSyntaxError(f"{element} cannot be aromatic", pos)
    iso = m.group("isotope")
    isotope = int(iso) if iso and int(iso) > 0 else None
    hc = m.group("hcount")
    if hc is None:
        explicit_h = 0
    elif hc == "H":
        explicit_h = 1
    else:
        explicit_h = int(hc[1:])
    chg = m.group("charge")
    if chg is None:
        charge = 0
    elif chg[0] == "+":
        charge = int(chg[1:]) if chg[1:].isdigit() else len(chg)
    else:
        charge = -(int(chg[1:]) if chg[1:].isdigit() else len(chg))
    return Atom(
        element=element,
        charge=charge,
        isotope=isotope,
        explicit_h=explicit_h,
        aromatic_input=aromatic,
        chirality=m.group("chiral"),
    )


def parse_smiles(text: str) -> Molecule:
    """Parse a SMILES string into a perceived Molecule.

    Raises SmilesSyntaxError / ValenceError / KekulizationError /
    InvalidStereoError on the corresponding failure.
    """
    if not isinstance(text, str):
        raise SmilesSyntaxError("input is not a string")
    text = text.strip()
    if not text:
        raise SmilesSyntaxError("empty input")

    mol = Molecule()
    orders: list[list[object]] = []  # per-atom neighbour order, parse sequence
    bond_tokens: list[str | None] = []
    dir_marks: list[tuple[int, str, int]] = []  # bond idx, '/' or '\\', from atom

    prev: int | None = None
    pending: str | None = None
    pending_pos = 0
    stack: list[int] = []
    open_rings: dict[str, _OpenRing] = {}

    def add_bond(
        a: int, b: int, token: str | None, pos: int, record_dir: bool = True
    ) -> int:
        try:
            bi = mol.add_bond(a, b, _BOND_ORDERS.get(token or "-", 1))
        except Exception as exc:
            raise SmilesSyntaxError(str(exc), pos) from None
        bond_tokens.append(token)
        if record_dir and token in ("/", "\\"):
            dir_marks.append((bi, token, a))
        return bi

    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if m.start() != pos:
            raise SmilesSyntaxError(
                f"unexpected character {text[pos]!r}", pos
            )
        pos = m.end()
        kind = m.lastgroup
        tok = m.group()

        if kind in ("bracket", "organic"):
            if kind == "bracket":
                atom = _parse_bracket(tok, m.start())
            else:
                aromatic = tok.islower()
                atom = Atom(element=tok.capitalize() if aromatic else tok,
                            aromatic_input=aromatic)
            idx = mol.add_atom(atom)
            orders.append([])
            if prev is not None:
                add_bond(prev, idx, pending, m.start())
                orders[prev].append(idx)
                orders[idx].append(prev)
            elif pending is not None:
                raise SmilesSyntaxError("bond with no preceding atom", pending_pos)
            if atom.explicit_h and atom.explicit_h >= 1:
                orders[idx].append("H")
            pending = None
            prev = idx

        elif kind == "bond":
            if prev is None:
                raise SmilesSyntaxError("bond with no preceding atom", m.start())
            if pending is not None:
                raise SmilesSyntaxError("two consecutive bond symbols", m.start())
            pending = tok
            pending_pos = m.start()

        elif kind == "ring":
            if prev is None:
                raise SmilesSyntaxError("ring bond with no preceding atom", m.start())
            label = tok[1:] if tok.startswith("%") else tok
            if label in open_rings:
                op = open_rings.pop(label)
                if op.atom == prev:
                    raise SmilesSyntaxError("ring bond to the same atom", m.start())
                token = _merge_ring_tokens(op.token, pending, m.start())
                bi = add_bond(op.atom, prev, token, m.start(), record_dir=False)
                # direction symbols read from the atom they are written at
                if op.token in ("/", "\\"):
                    dir_marks.append((bi, op.token, op.atom))
                if pending in ("/", "\\"):
                    dir_marks.append((bi, pending, prev))
                # patch the reserved neighbour-order slot at the opening atom
                orders[op.atom][op.slot] = prev
                orders[prev].append(op.atom)
            else:
                placeholder = object()
                orders[prev].append(placeholder)
                open_rings[label] = _OpenRing(
                    prev, pending, len(orders[prev]) - 1, placeholder
                )
            pending = None

        elif kind == "open":
            if prev is None:
                raise SmilesSyntaxError("branch with no preceding atom", m.start())
            if pending is not None:
                raise SmilesSyntaxError("bond before branch open", m.start())
            stack.append(prev)

        elif kind == "close":
            if pending is not None:
                raise SmilesSyntaxError("dangling bond in branch", m.start())
            if not stack:
                raise SmilesSyntaxError("unmatched ')'", m.start())
            prev = stack.pop()

        elif kind == "dot":
            if pending is not None:
                raise SmilesSyntaxError("bond before dot", m.start())
            if stack:
                raise SmilesSyntaxError("dot inside branch", m.start())
            prev = None

    if pos != len(text):
        raise SmilesSyntaxError(f"unexpected character {text[pos]!r}", pos)
    if pending is not None:
        raise SmilesSyntaxError("dangling bond at end of input", pending_pos)
    if stack:
        raise SmilesSyntaxError("unclosed '('")
    if open_rings:
        labels = ", ".join(sorted(open_rings))
        raise SmilesSyntaxError(f"unclosed ring bond(s): {labels}")

    return _finalize(mol, orders, bond_tokens, dir_marks)


def _merge_ring_tokens(t_open: str | None, t_close: str | None, pos: int) -> str | None:
    if t_open is None:
        return t_close
    if t_close is None:
        return t_open
    directional = {"/", "\\"}
    if t_open in directional and t_close in directional:
        if t_open == t_close:
            raise SmilesSyntaxError(
                "ring closure direction must be complementary", pos
            )
        return t_open
    if t_open != t_close:
        raise SmilesSyntaxError("conflicting ring closure bond orders", pos)
    return t_open


def _finalize(
    mol: Molecule,
    orders: list[list[object]],
    bond_tokens: list[str | None],
    dir_marks: list[tuple[int, str, int]],
) -> Molecule:
    mol, orders, bond_tokens, dir_marks = _fold_hydrogens(
        mol, orders, bond_tokens, dir_marks
    )
    aromatic_bonds = _resolve_bond_orders(mol, bond_tokens)
    kekulize(mol, aromatic_bonds)
    assign_implicit_hydrogens(mol)
    perceive_aromaticity(mol)
    check_aromatic_claims(mol)
    stereo_mod.finalize_bond_stereo(mol, dir_marks)
    _attach_chirality(mol, orders)
    return mol


def _fold_hydrogens(mol, orders, bond_tokens, dir_marks):
    """Merge plain explicit [H] leaf atoms into their neighbour's H count."""
    fold: set[int] = set()
    for idx, atom in enumerate(mol.atoms):
        if (
            atom.element == "H"
            and atom.isotope is None
            and atom.charge == 0
            and atom.chirality is None
            and atom.bracket_h == 0
            and mol.degree(idx) == 1
        ):
            bi = mol.bond_indices(idx)[0]
            if bond_tokens[bi] not in (None, "-"):
                continue
            partner = mol.bonds[bi].other(idx)
            if mol.atoms[partner].element == "H":
                continue
            fold.add(idx)

    if not fold:
        return mol, orders, bond_tokens, dir_marks

    remap: dict[int, int] = {}
    new = Molecule()
    for idx, atom in enumerate(mol.atoms):
        if idx in fold:
            continue
        remap[idx] = new.add_atom(atom)
    new_orders: list[list[object]] = [[] for _ in range(len(new.atoms))]
    new_tokens: list[str | None] = []
    bond_remap: dict[int, int] = {}
    for bi, bond in enumerate(mol.bonds):
        if bond.a in fold or bond.b in fold:
            heavy = bond.b if bond.a in fold else bond.a
            partner = new.atoms[remap[heavy]]
            partner.folded_h += 1
            continue
        nbi = new.add_bond(remap[bond.a], remap[bond.b], bond.order)
        bond_remap[bi] = nbi
        new_tokens.append(bond_tokens[bi])
    for idx, entries in enumerate(orders):
        if idx in fold:
            continue
        atom = new.atoms[remap[idx]]
        out: list[object] = []
        for e in entries:
            if isinstance(e, int) and e in fold:
                out.append("H")
            elif isinstance(e, int):
                out.append(remap[e])
            else:
                out.append(e)
        if out.count("H") >= 2:
            atom.chirality = None  # two hydrogens: parity is degenerate
        new_orders[remap[idx]] = out
    new_marks = [
        (bond_remap[bi], sym, remap[frm])
        for bi, sym, frm in dir_marks
        if bi in bond_remap
    ]
    return new, new_orders, new_tokens, new_marks


def _resolve_bond_orders(mol: Molecule, bond_tokens: list[str | None]) -> set[int]:
    """Fix default/aromatic bond orders; returns written-aromatic bond idxs."""
    aromatic_bonds: set[int] = set()
    for bi, bond in enumerate(mol.bonds):
        token = bond_tokens[bi]
        a, b = mol.atoms[bond.a], mol.atoms[bond.b]
        if token == ":":
            if not (a.aromatic_input and b.aromatic_input) or not mol.bond_in_ring(bi):
                raise KekulizationError("':' bond outside an aromatic ring")
            bond.order = 1
            aromatic_bonds.add(bi)
        elif token is None:
            if a.aromatic_input and b.aromatic_input and mol.bond_in_ring(bi):
                bond.order = 1
                aromatic_bonds.add(bi)
    for idx, atom in enumerate(mol.atoms):
        if atom.aromatic_input and not mol.atom_in_ring(idx):
            raise KekulizationError(
                f"atom {idx} written aromatic but not in a ring"
            )
    return aromatic_bonds


def _attach_chirality(mol: Molecule, orders: list[list[object]]) -> None:
    for idx, atom in enumerate(mol.atoms):
        if atom.chirality is None:
            continue
        entries = orders[idx]
        if atom.bracket_h is not None and atom.bracket_h >= 2:
            atom.chirality = None
            continue
        if any(not isinstance(e, int) and e != "H" for e in entries):
            atom.chirality = None  # unresolved ring slot: malformed
            continue
        if len(entries) not in (3, 4) or len(set(map(str, entries))) != len(entries):
            atom.chirality = None
            continue
        mol.chiral_order[idx] = list(entries)
