"""Molecular property oracles: built-in descriptors plus learned bindings."""

from .crippen import CONTRIB, CrippenResult, assign_types, crippen_contributions
from .descriptors import (
    aromatic_ring_count,
    h_bond_acceptors,
    h_bond_donors,
    molecular_weight,
    rotatable_bonds,
    tpsa,
)
from .errors import OracleMiss, PropertyError, UnboundOracle
from .oracle import (
    BBBP,
    DEFAULT_REGISTRY,
    HBA,
    HBD,
    HIA,
    KINDS,
    LOGP,
    MR,
    MUTAG,
    MW,
    PLOGP,
    QED,
    ROTB,
    OracleBinding,
    OracleRegistry,
    PropertyKind,
    compare_property,
    compute_property,
    is_builtin,
    kind_of,
)
from .qed import qed, qed_descriptors, structural_alerts

__all__ = [
    "CONTRIB",
    "CrippenResult",
    "assign_types",
    "crippen_contributions",
    "molecular_weight",
    "h_bond_donors",
    "h_bond_acceptors",
    "rotatable_bonds",
    "aromatic_ring_count",
    "tpsa",
    "qed",
    "qed_descriptors",
    "structural_alerts",
    "PropertyError",
    "UnboundOracle",
    "OracleMiss",
    "PropertyKind",
    "OracleBinding",
    "OracleRegistry",
    "DEFAULT_REGISTRY",
    "KINDS",
    "kind_of",
    "is_builtin",
    "compute_property",
    "compare_property",
    "LOGP",
    "MR",
    "MW",
    "QED",
    "HBD",
    "HBA",
    "ROTB",
    "PLOGP",
    "BBBP",
    "MUTAG",
    "HIA",
]
