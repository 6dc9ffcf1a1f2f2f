"""Thinking-mode formatting of QA records.

Two behaviors share one output layout, so switching modes never changes
the answer text:

    think     <think>\n{reasoning}\n</think>\n{answer}
    no_think  <think>\n\n</think>\n{answer}, instruction suffixed with the
              no-think flag

format_mode is idempotent in both directions and can reformat a record
that already carries the other mode's markup.
"""

from __future__ import annotations

from ..common import (
    EMPTY_THINK_BLOCK,
    THINK_CLOSE,
    THINK_OPEN,
    append_no_think_flag,
)
from .errors import MissingThinking
from .records import MODES, QaRecord


def split_think(output: str) -> tuple[str | None, str]:
    """Split a leading think block from the answer text.

    Returns (reasoning or None, answer). The reasoning loses only the
    newlines the formatter added; an absent or empty block yields None.
    """
    if not output.startswith(THINK_OPEN):
        return None, output
    end = output.find(THINK_CLOSE)
    if end < 0:
        return None, output
    body = output[len(THINK_OPEN):end].strip("\n")
    answer = output[end + len(THINK_CLOSE):]
    if answer.startswith("\n"):
        answer = answer[1:]
    return (body or None), answer


def think_output(thinking: str, answer: str) -> str:
    return f"{THINK_OPEN}\n{thinking}\n{THINK_CLOSE}\n{answer}"


def no_think_output(answer: str) -> str:
    return f"{EMPTY_THINK_BLOCK}\n{answer}"


def format_mode(rec: QaRecord, mode: str) -> QaRecord:
    """Return the record formatted for the requested behavior."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    embedded, answer = split_think(rec.output)
    if mode == "no_think":
        thinking = rec.thinking or embedded
        return rec.with_fields(
            instruction=append_no_think_flag(rec.instruction),
            output=no_think_output(answer),
            thinking=thinking,
            mode="no_think",
        )
    thinking = rec.thinking or embedded
    if not thinking or not thinking.strip():
        raise MissingThinking(
            f"task {rec.task!r}: thinking mode needs reasoning text"
        )
    return rec.with_fields(
        output=think_output(thinking, answer),
        thinking=thinking,
        mode="think",
    )


__all__ = ["split_think", "think_output", "no_think_output", "format_mode"]
