"""Shared exceptions and the thinking-mode format conventions.

The instruction format treats explicit reasoning as a block between
THINK_OPEN and THINK_CLOSE at the start of the assistant output. Requests
that want the non-thinking behavior append NO_THINK_FLAG to the user
instruction, and the output keeps an empty block so the layout never
changes shape. Dataset preparation and the inference client must agree on
these strings byte for byte, so they live here.
"""

from __future__ import annotations


class EmptyInput(ValueError):
    """An aggregate was requested over zero instances."""


THINK_OPEN = "<think>"
THINK_CLOSE = "</think>"
EMPTY_THINK_BLOCK = "<think>\n\n</think>"
NO_THINK_FLAG = "/no_think"


def append_no_think_flag(text: str) -> str:
    """Suffix the no-think flag, idempotently, separated by one space."""
    if text.rstrip().endswith(NO_THINK_FLAG):
        return text
    return text.rstrip() + " " + NO_THINK_FLAG


def has_no_think_flag(text: str) -> bool:
    return text.rstrip().endswith(NO_THINK_FLAG)


__all__ = [
    "EmptyInput",
    "THINK_OPEN",
    "THINK_CLOSE",
    "EMPTY_THINK_BLOCK",
    "NO_THINK_FLAG",
    "append_no_think_flag",
    "has_no_think_flag",
]
