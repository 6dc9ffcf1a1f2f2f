"""HTTP transport for chat-completion endpoints.

A transport is any callable (url, payload, headers, timeout) -> dict.
The default uses `requests`; tests inject fakes. Transport failures are
normalized to the client's error taxonomy so the retry policy can treat
every backend uniformly.
"""

from __future__ import annotations

from typing import Callable

import requests

from .errors import MalformedResponse, RateLimited, Timeout, TransportError

Transport = Callable[[str, dict, dict, float], dict]


def http_transport(url: str, payload: dict, headers: dict,
                   timeout: float) -> dict:
    try:
        resp = requests.post(url, json=payload, headers=headers,
                             timeout=timeout)
    except requests.Timeout as exc:
        raise Timeout(str(exc)) from exc
    except requests.RequestException as exc:
        raise TransportError(str(exc)) from exc
    if resp.status_code == 429:
        raise RateLimited(f"429 from {url}")
    if resp.status_code >= 400:
        raise TransportError(f"{resp.status_code} from {url}")
    try:
        return resp.json()
    except ValueError as exc:
        raise MalformedResponse(f"non-JSON body from {url}") from exc


def extract_texts(body: dict, expected_n: int) -> tuple[list[str], dict | None]:
    """Pull the generated texts (and usage) out of a chat-completion body."""
    try:
        choices = body["choices"]
        texts = [c["message"]["content"] for c in choices]
    except (KeyError, TypeError) as exc:
        raise MalformedResponse(f"unexpected response shape: {exc}") from exc
    if not all(isinstance(t, str) for t in texts):
        raise MalformedResponse("non-string message content")
    if len(texts) != expected_n:
        raise MalformedResponse(
            f"requested {expected_n} sequences, got {len(texts)}"
        )
    usage = body.get("usage")
    if usage is not None and not isinstance(usage, dict):
        raise MalformedResponse("usage is not an object")
    return texts, usage


__all__ = ["Transport", "http_transport", "extract_texts"]
