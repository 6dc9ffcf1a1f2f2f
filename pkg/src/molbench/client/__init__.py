"""Inference client: wire contract, caching, retries, batch generation."""

from .cache import ResponseCache, canonical_request, request_key
from .client import ModelClient, build_payload
from .errors import (
    CacheMiss,
    ClientError,
    MalformedResponse,
    RateLimited,
    Timeout,
    TransportError,
)
from .transport import Transport, extract_texts, http_transport
from .types import EndpointConfig, GenParams, ModelResponse

__all__ = [
    "ClientError",
    "Timeout",
    "TransportError",
    "RateLimited",
    "MalformedResponse",
    "CacheMiss",
    "GenParams",
    "EndpointConfig",
    "ModelResponse",
    "ResponseCache",
    "canonical_request",
    "request_key",
    "Transport",
    "http_transport",
    "extract_texts",
    "ModelClient",
    "build_payload",
]
