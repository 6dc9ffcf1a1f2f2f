"""Functional-group counting and edit verification."""

from .matchers import ALL_GROUPS, GroupKind, count_all, count_group, group_of
from .verify import (
    COUNT_MISMATCH,
    DEFAULT_POLICY,
    INVALID_SMILES,
    OK,
    UNRELATED,
    EditInstruction,
    EditPolicy,
    Verdict,
    success_rate,
    verify_edit,
)

__all__ = [
    "GroupKind",
    "ALL_GROUPS",
    "group_of",
    "count_group",
    "count_all",
    "EditInstruction",
    "EditPolicy",
    "DEFAULT_POLICY",
    "Verdict",
    "verify_edit",
    "success_rate",
    "OK",
    "INVALID_SMILES",
    "COUNT_MISMATCH",
    "UNRELATED",
]
