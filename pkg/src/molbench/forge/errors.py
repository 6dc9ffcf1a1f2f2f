"""Errors raised by the dataset preparation pipeline."""


class ForgeError(ValueError):
    """Base class for dataset preparation failures."""


class OverlappingSpans(ForgeError):
    """Two span annotations cover intersecting character ranges."""


class MissingThinking(ForgeError):
    """Thinking mode was requested for a record with no reasoning text."""


class SourceMissing(ForgeError):
    """A mixture source file does not exist."""


class RecordInvalid(ForgeError):
    """A record violates the QA record contract."""


__all__ = [
    "ForgeError",
    "OverlappingSpans",
    "MissingThinking",
    "SourceMissing",
    "RecordInvalid",
]
