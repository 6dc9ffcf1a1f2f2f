"""Inference client failure modes."""


class ClientError(Exception):
    """Base class for inference client failures."""


class Timeout(ClientError):
    """The request exceeded the configured deadline."""


class TransportError(ClientError):
    """The endpoint was unreachable or returned a broken transport state."""


class RateLimited(ClientError):
    """The endpoint asked us to back off."""


class MalformedResponse(ClientError):
    """The endpoint answered, but not in the expected shape."""


class CacheMiss(ClientError):
    """Replay-only mode found no cached response for the request."""


__all__ = [
    "ClientError",
    "Timeout",
    "TransportError",
    "RateLimited",
    "MalformedResponse",
    "CacheMiss",
]
