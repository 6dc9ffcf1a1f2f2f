"""Grammar-level random SMILES generator for round-trip fuzzing.

Builds syntactically valid, valence-respecting SMILES strings without going
through the package's writer, so writer/parser/canonicalizer agreement is
tested against independently produced inputs. The generator tracks remaining
valence per chain atom and only opens ring digits through self-contained
templates, which keeps every emitted string parseable by construction.
"""

from __future__ import annotations

import random

# element -> lowest valence the generator budgets against
CHAIN_ATOMS = {"C": 4, "N": 3, "O": 2, "S": 2, "P": 3}
TERMINALS = {"F": 1, "Cl": 1, "Br": 1, "I": 1, "O": 2, "N": 3, "C": 4}

# attachment point is the first atom; one incoming single bond
_AROMATIC_TEMPLATES = (
    ("c{d}ccccc{d}", 6),
    ("c{d}ccncc{d}", 6),
    ("c{d}ccoc{d}", 5),
    ("c{d}ccsc{d}", 5),
    ("c{d}cc[nH]c{d}", 5),
    ("c{d}ncc[nH]{d}", 5),
)
_FUSED_TEMPLATE = ("c{d}ccc{e}ccccc{e}c{d}", 10)
_RING_TEMPLATES = (
    ("C{d}CC{d}", 3),
    ("C{d}CCC{d}", 4),
    ("C{d}CCCC{d}", 5),
    ("C{d}CCCCC{d}", 6),
    ("C{d}CCOCC{d}", 6),
    ("C{d}CCNCC{d}", 6),
)

# (text, atoms consumed from budget, valence consumed at the current atom)
_DECORATIONS = (
    ("(=O)", 1, 2),
    ("(=S)", 1, 2),
    ("(#N)", 1, 3),
    ("([O-])", 1, 1),
    ("([NH3+])", 1, 1),
    ("([13CH3])", 1, 1),
    ("([N+](C)(C)C)", 4, 1),
)

_STEREO_SUBST = ("F", "Cl", "C", "CC")
_TETRA_SUBST = ("C", "N", "O", "F", "Cl", "CC", "CO", "C(C)C")


class _Gen:
    def __init__(self, rng: random.Random, max_atoms: int):
        self.rng = rng
        self.left = max_atoms

    def _take(self, n: int) -> bool:
        if self.left < n:
            return False
        self.left -= n
        return True

    def _terminal(self, max_order: int) -> tuple[str, int]:
        choices = [
            (sym, val) for sym, val in TERMINALS.items() if val >= max_order
        ]
        return self.rng.choice(choices)

    def _template(self) -> str | None:
        pick = self.rng.random()
        if pick < 0.15:
            text, cost = _FUSED_TEMPLATE
            if not self._take(cost):
                return None
            return text.format(d=1, e=2)
        pool = _AROMATIC_TEMPLATES if pick < 0.7 else _RING_TEMPLATES
        text, cost = self.rng.choice(pool)
        if not self._take(cost):
            return None
        return text.format(d=1)

    def _stereo_unit(self) -> str | None:
        if not self._take(3):
            return None
        slash = self.rng.choice(("/", "\\"))
        tail = self.rng.choice(_STEREO_SUBST)
        return f"/C=C{slash}{tail}"

    def _tetra_unit(self) -> str | None:
        if not self._take(4):
            return None
        tag = self.rng.choice(("[C@H]", "[C@@H]"))
        a, b = (self.rng.choice(_TETRA_SUBST) for _ in range(2))
        return f"{tag}({a}){b}"

    def chain(self, incoming: int, depth: int) -> str:
        """One linear chain; the caller has already paid `incoming` bonds."""
        out = []
        element, valence = self.rng.choice(
            [(e, v) for e, v in CHAIN_ATOMS.items() if v > incoming]
        )
        self.left -= 1
        out.append(element)
        remaining = valence - incoming
        stereo_used = False

        while remaining > 0 and self.left > 0:
            roll = self.rng.random()
            if roll < 0.18 and len(out) > 1:
                break
            if roll < 0.30 and depth < 3 and remaining >= 1 and self.left >= 2:
                # parenthesised side chain
                out.append(f"({self.chain(1, depth + 1)})")
                remaining -= 1
            elif roll < 0.38:
                deco, cost, spend = self.rng.choice(_DECORATIONS)
                if spend <= remaining and self._take(cost):
                    out.append(deco)
                    remaining -= spend
            elif roll < 0.44 and not stereo_used and remaining >= 1 and incoming < 2:
                unit = self._stereo_unit()
                if unit is not None:
                    out.append(f"({unit})" if remaining > 1 else unit)
                    remaining -= 1
                    stereo_used = True
            elif roll < 0.50 and remaining >= 1:
                unit = self._tetra_unit()
                if unit is not None:
                    out.append(unit)
                    remaining = 0  # unit is terminal: chain ends behind it
            elif roll < 0.58 and remaining >= 1:
                ring = self._template()
                if ring is not None:
                    out.append(f"({ring})" if remaining > 1 else ring)
                    remaining -= 1
            elif roll < 0.70 and remaining >= 1:
                sym, _ = self._terminal(1)
                if self.left >= 1:
                    self.left -= 1
                    out.append(f"({sym})")
                    remaining -= 1
            else:
                order = 1
                if remaining >= 3 and not stereo_used and self.rng.random() < 0.08:
                    order = 3
                elif remaining >= 2 and not stereo_used and self.rng.random() < 0.2:
                    order = 2
                if self.left < 1:
                    break
                bond = {1: "", 2: "=", 3: "#"}[order]
                if self.rng.random() < 0.25 or self.left < 2:
                    sym, _ = self._terminal(order)
                    self.left -= 1
                    out.append(bond + sym)
                    remaining = 0  # the terminal atom now ends the string
                else:
                    out.append(bond + self.chain(order, depth + 1))
                    remaining = 0  # continuation moved into the sub-chain
        return "".join(out)


_IONS = ("[Na+]", "[K+]", "[Cl-]", "[NH4+]", "[OH-]", "O", "CCO")


def random_smiles(rng: random.Random | int, max_atoms: int = 30) -> str:
    """One random valid SMILES string with at most max_atoms heavy atoms."""
    if isinstance(rng, int):
        rng = random.Random(f"genmol:{rng}")
    gen = _Gen(rng, max_atoms)
    text = gen.chain(0, 0)
    if rng.random() < 0.12:
        text += "." + rng.choice(_IONS)
    return text


def random_smiles_batch(n: int, seed: int = 0, max_atoms: int = 30) -> list[str]:
    rng = random.Random(f"genmol:{seed}")
    return [random_smiles(rng, max_atoms) for _ in range(n)]


if __name__ == "__main__":
    for smi in random_smiles_batch(25, seed=1):
        print(smi)
