"""Property kinds, built-in evaluators, and external lookup bindings."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from ..chem import canonicalize
from ..chem.mol import Molecule
from .crippen import crippen_contributions
from .descriptors import (
    h_bond_acceptors,
    h_bond_donors,
    molecular_weight,
    rotatable_bonds,
)
from .errors import OracleMiss, PropertyError, UnboundOracle
from .qed import qed


@dataclass(frozen=True)
class PropertyKind:
    """A named molecular property.

    direction_sensitive marks kinds where "increase"/"decrease" instructions
    are meaningful; classification-style kinds compare by label instead.
    """

    tag: str
    direction_sensitive: bool = True


LOGP = PropertyKind("logP")
MR = PropertyKind("MR")
MW = PropertyKind("MW")
QED = PropertyKind("QED")
HBD = PropertyKind("HBD")
HBA = PropertyKind("HBA")
ROTB = PropertyKind("RotB")
PLOGP = PropertyKind("plogP")
BBBP = PropertyKind("BBBP", direction_sensitive=False)
MUTAG = PropertyKind("Mutag", direction_sensitive=False)
HIA = PropertyKind("HIA", direction_sensitive=False)

KINDS = {
    k.tag: k
    for k in (LOGP, MR, MW, QED, HBD, HBA, ROTB, PLOGP, BBBP, MUTAG, HIA)
}

_BUILTIN: dict[str, Callable[[Molecule], float]] = {
    "logP": lambda m: crippen_contributions(m).logp,
    "MR": lambda m: crippen_contributions(m).mr,
    "MW": molecular_weight,
    "QED": qed,
    "HBD": lambda m: float(h_bond_donors(m)),
    "HBA": lambda m: float(h_bond_acceptors(m)),
    "RotB": lambda m: float(rotatable_bonds(m)),
}


def kind_of(tag: str) -> PropertyKind:
    try:
        return KINDS[tag]
    except KeyError:
        raise PropertyError(f"unknown property kind: {tag!r}") from None


def is_builtin(kind: PropertyKind) -> bool:
    return kind.tag in _BUILTIN


@dataclass
class OracleBinding:
    """Externally supplied values for a learned property kind.

    The source is either a delimited text file (canonical SMILES, tab, value;
    one row per molecule) or a callable keyed by canonical SMILES. File rows
    load once and stay read-only; a missing molecule is always an explicit
    error, never a default.
    """

    kind: PropertyKind
    source: str | Path | Callable[[str], float]
    preload: bool = True
    _table: dict[str, float] | None = field(default=None, repr=False)

    def _load(self) -> dict[str, float]:
        if self._table is None:
            table: dict[str, float] = {}
            with open(self.source, encoding="utf-8") as fh:
                for line_no, line in enumerate(fh, 1):
                    line = line.rstrip("\n")
                    if not line or line.startswith("#"):
                        continue
                    parts = line.split("\t")
                    if len(parts) != 2:
                        raise PropertyError(
                            f"{self.source}:{line_no}: expected"
                            f" smiles<TAB>value, got {line!r}"
                        )
                    table[parts[0]] = float(parts[1])
            self._table = table
        return self._table

    def lookup(self, canonical: str) -> float:
        if callable(self.source):
            try:
                return float(self.source(canonical))
            except KeyError:
                raise OracleMiss(
                    f"{self.kind.tag}: no value for {canonical}"
                ) from None
        table = self._load()
        if canonical not in table:
            raise OracleMiss(f"{self.kind.tag}: no value for {canonical}")
        return table[canonical]


class OracleRegistry:
    """Holds the bindings for learned property kinds."""

    def __init__(self) -> None:
        self._bindings: dict[str, OracleBinding] = {}

    def bind(self, binding: OracleBinding) -> None:
        if is_builtin(binding.kind):
            raise PropertyError(
                f"{binding.kind.tag} is built in; bindings are for"
                " learned kinds"
            )
        if binding.preload and not callable(binding.source):
            binding._load()
        self._bindings[binding.kind.tag] = binding

    def unbind(self, kind: PropertyKind) -> None:
        self._bindings.pop(kind.tag, None)

    def get(self, kind: PropertyKind) -> OracleBinding:
        if kind.tag not in self._bindings:
            raise UnboundOracle(
                f"{kind.tag} requires an oracle binding and none is"
                " registered"
            )
        return self._bindings[kind.tag]


DEFAULT_REGISTRY = OracleRegistry()


def compute_property(
    mol: Molecule,
    kind: PropertyKind | str,
    registry: OracleRegistry | None = None,
) -> float:
    """Evaluate a property on a parsed molecule.

    Built-in kinds are computed structurally; learned kinds resolve through
    the registry and raise UnboundOracle / OracleMiss rather than guessing.
    """
    if isinstance(kind, str):
        kind = kind_of(kind)
    fn = _BUILTIN.get(kind.tag)
    if fn is not None:
        return fn(mol)
    reg = registry if registry is not None else DEFAULT_REGISTRY
    binding = reg.get(kind)
    return binding.lookup(str(canonicalize(mol)))


def compare_property(
    src: Molecule,
    dst: Molecule,
    kind: PropertyKind | str,
    want: str,
    registry: OracleRegistry | None = None,
) -> bool:
    """True iff the property moved strictly in the requested direction."""
    if want not in ("increase", "decrease"):
        raise PropertyError(f"want must be increase or decrease, got {want!r}")
    a = compute_property(src, kind, registry)
    b = compute_property(dst, kind, registry)
    return b > a if want == "increase" else b < a


__all__ = [
    "PropertyKind",
    "OracleBinding",
    "OracleRegistry",
    "DEFAULT_REGISTRY",
    "KINDS",
    "kind_of",
    "is_builtin",
    "compute_property",
    "compare_property",
]
