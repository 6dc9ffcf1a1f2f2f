"""Pluggable inference client with caching, retries, and batch fan-out.

The wire contract is the chat-completion shape: the payload always carries
{model, messages, temperature, max_tokens, n, stop}; anything in
GenParams.extras is merged on top for server-specific controls. The cache
key is the content address of that payload, so any two requests that would
hit the server identically share one cache entry, and a fully warmed cache
replays a run without opening a single connection.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor

from ..common import append_no_think_flag
from .cache import ResponseCache, request_key
from .errors import CacheMiss, ClientError, RateLimited, Timeout, TransportError
from .transport import Transport, extract_texts, http_transport
from .types import EndpointConfig, GenParams, ModelResponse

_RETRYABLE = (Timeout, TransportError, RateLimited)


def build_payload(prompt: str, params: GenParams, model: str) -> dict:
    """The canonical request body for one prompt."""
    if params.thinking == "no_think":
        prompt = append_no_think_flag(prompt)
    payload = {
        "model": model,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": params.temperature,
        "max_tokens": params.max_new_tokens,
        "n": params.num_return_sequences,
        "stop": list(params.stop),
    }
    for key in sorted(params.extras):
        payload[key] = params.extras[key]
    if params.beam_width is not None:
        payload.setdefault("beam_width", params.beam_width)
    return payload


class ModelClient:
    """One endpoint plus an optional response cache.

    replay_only=True answers exclusively from the cache and raises
    CacheMiss instead of ever touching the network; it is how benchmark
    replays stay bit-identical and offline.
    """

    def __init__(
        self,
        endpoint: EndpointConfig,
        cache_dir=None,
        transport: Transport | None = None,
        replay_only: bool = False,
        sleeper=time.sleep,
        clock=time.monotonic,
    ):
        self.endpoint = endpoint
        self.cache = ResponseCache(cache_dir) if cache_dir else None
        self.transport = transport if transport is not None else http_transport
        self.replay_only = replay_only
        self._sleep = sleeper
        self._clock = clock

    def _headers(self) -> dict:
        headers = {"Content-Type": "application/json"}
        if self.endpoint.token_env:
            token = os.environ.get(self.endpoint.token_env)
            if token:
                headers["Authorization"] = f"Bearer {token}"
        return headers

    def _call_with_retries(self, payload: dict) -> dict:
        url = self.endpoint.base_url.rstrip("/") + "/chat/completions"
        attempts = self.endpoint.retries + 1
        for attempt in range(attempts):
            try:
                return self.transport(url, payload, self._headers(),
                                      self.endpoint.timeout)
            except _RETRYABLE:
                if attempt + 1 == attempts:
                    raise
                self._sleep(self.endpoint.backoff * (2 ** attempt))
        raise AssertionError("unreachable")

    def generate(self, prompt: str, params: GenParams) -> ModelResponse:
        payload = build_payload(prompt, params, self.endpoint.model)
        key = request_key(payload)
        if self.cache is not None:
            cached = self.cache.get(key)
            if cached is not None:
                texts, usage = extract_texts(
                    cached, params.num_return_sequences
                )
                return ModelResponse(texts=texts, latency=0.0, usage=usage,
                                     cache_hit=True)
        if self.replay_only:
            raise CacheMiss(f"no cached response for request {key[:12]}…")
        start = self._clock()
        body = self._call_with_retries(payload)
        latency = self._clock() - start
        texts, usage = extract_texts(body, params.num_return_sequences)
        if self.cache is not None:
            self.cache.put(key, body)
        return ModelResponse(texts=texts, latency=latency, usage=usage,
                             cache_hit=False)

    def batch_generate(
        self, prompts: list[str], params: GenParams
    ) -> list[ModelResponse | ClientError]:
        """Order-preserving fan-out; failures fill their slot, never raise."""
        if not prompts:
            return []
        results: list[ModelResponse | ClientError | None] = [None] * len(prompts)

        def run(i: int) -> None:
            try:
                results[i] = self.generate(prompts[i], params)
            except ClientError as exc:
                results[i] = exc

        with ThreadPoolExecutor(
            max_workers=self.endpoint.max_in_flight
        ) as pool:
            list(pool.map(run, range(len(prompts))))
        return results  # type: ignore[return-value]

    def cache_stats(self) -> dict:
        return self.cache.stats() if self.cache else {"hits": 0, "misses": 0}


__all__ = ["ModelClient", "build_payload"]
