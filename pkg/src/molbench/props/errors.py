"""Errors raised by property oracles."""


class PropertyError(ValueError):
    pass


class UnboundOracle(PropertyError):
    """A learned property kind was queried without a registered binding."""


class OracleMiss(PropertyError):
    """A bound lookup table has no row for the queried molecule."""


__all__ = ["PropertyError", "UnboundOracle", "OracleMiss"]
