"""Edit-instruction verification: did the generated molecule do what was asked."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chem import ChemError, morgan_fingerprint, parse_smiles, tanimoto
from ..chem.mol import Molecule
from ..common import EmptyInput
from .matchers import ALL_GROUPS, GroupKind, count_group

OK = "ok"
INVALID_SMILES = "invalid_smiles"
COUNT_MISMATCH = "count_mismatch"
UNRELATED = "unrelated_molecule"


@dataclass(frozen=True)
class Verdict:
    success: bool
    reason: str
    detail: str = ""

    def __post_init__(self):
        if self.success and self.reason != OK:
            raise ValueError("successful verdicts must carry reason 'ok'")


@dataclass(frozen=True)
class EditInstruction:
    kind: str  # add | delete | substitute
    group: GroupKind
    source: Molecule
    replacement: GroupKind | None = None

    def __post_init__(self):
        if self.kind not in ("add", "delete", "substitute"):
            raise ValueError(f"unknown edit kind: {self.kind!r}")
        if (self.replacement is not None) != (self.kind == "substitute"):
            raise ValueError(
                "replacement group is required for substitute and"
                " forbidden otherwise"
            )


@dataclass(frozen=True)
class EditPolicy:
    """Verification strictness knobs.

    similarity_floor rejects answers whose fingerprint similarity to the
    source falls below the floor (an unrelated molecule that happens to have
    the right group counts). strict_collateral additionally pins every
    untouched group count to its source value.
    """

    similarity_floor: float = 0.1
    strict_collateral: bool = False
    fp_radius: int = 2
    fp_size: int = 2048


DEFAULT_POLICY = EditPolicy()


def _expected_deltas(instr: EditInstruction) -> dict[str, int]:
    if instr.kind == "add":
        return {instr.group.tag: 1}
    if instr.kind == "delete":
        return {instr.group.tag: -1}
    deltas = {instr.group.tag: -1}
    rep = instr.replacement.tag
    deltas[rep] = deltas.get(rep, 0) + 1
    return deltas


def verify_edit(
    instr: EditInstruction,
    generated: str,
    policy: EditPolicy = DEFAULT_POLICY,
) -> Verdict:
    """Judge a generated SMILES against an edit instruction.

    Failures come back as verdicts, never exceptions: unparseable answers,
    molecules unrelated to the source, and wrong group-count deltas each map
    to their own reason.
    """
    try:
        gen = parse_smiles(generated)
    except ChemError as exc:
        return Verdict(False, INVALID_SMILES, str(exc))

    if policy.similarity_floor > 0.0:
        fp_src = morgan_fingerprint(
            instr.source, policy.fp_radius, policy.fp_size
        )
        fp_gen = morgan_fingerprint(gen, policy.fp_radius, policy.fp_size)
        sim = tanimoto(fp_src, fp_gen)
        if sim < policy.similarity_floor:
            return Verdict(
                False, UNRELATED, f"similarity {sim:.3f} below floor"
            )

    deltas = _expected_deltas(instr)
    for tag, want in deltas.items():
        before = count_group(instr.source, tag)
        after = count_group(gen, tag)
        if after - before != want:
            return Verdict(
                False,
                COUNT_MISMATCH,
                f"{tag}: {before} -> {after}, expected {before + want}",
            )
    if policy.strict_collateral:
        for g in ALL_GROUPS:
            if g.tag in deltas:
                continue
            before = count_group(instr.source, g)
            after = count_group(gen, g)
            if before != after:
                return Verdict(
                    False,
                    COUNT_MISMATCH,
                    f"collateral change in {g.tag}: {before} -> {after}",
                )
    return Verdict(True, OK)


def success_rate(verdicts: list[Verdict]) -> float:
    if not verdicts:
        raise EmptyInput("success_rate needs at least one verdict")
    return sum(1 for v in verdicts if v.success) / len(verdicts)


__all__ = [
    "Verdict",
    "EditInstruction",
    "EditPolicy",
    "DEFAULT_POLICY",
    "verify_edit",
    "success_rate",
    "OK",
    "INVALID_SMILES",
    "COUNT_MISMATCH",
    "UNRELATED",
]
