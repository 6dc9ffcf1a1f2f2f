"""Errors raised by metric computations."""

from ..common import EmptyInput


class MetricError(ValueError):
    pass


class NoAnswerFound(MetricError):
    """No payload of the requested kind could be located in model text."""


class GoldInvalid(MetricError):
    """The reference side of a comparison does not parse."""


__all__ = ["MetricError", "NoAnswerFound", "GoldInvalid", "EmptyInput"]
