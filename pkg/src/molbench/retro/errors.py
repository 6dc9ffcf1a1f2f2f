"""Retrosynthesis scoring failure modes."""


class RetroError(ValueError):
    """Base class for retrosynthesis model errors."""


class RouteFormatError(RetroError):
    """A route record or tree violates the route contract."""


class EmptyAnswer(RetroError):
    """A loss was requested with no answer tokens."""


class InsufficientVariants(RetroError):
    """A molecule admits fewer distinct renderings than requested."""


__all__ = [
    "RetroError",
    "RouteFormatError",
    "EmptyAnswer",
    "InsufficientVariants",
]
