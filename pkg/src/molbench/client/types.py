"""Request and response value types for the inference client."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class GenParams:
    """Decoding controls for one generation request.

    `extras` pass through to the wire payload untouched; beam-search or
    sampler knobs beyond the shared contract are server-specific and
    belong there. `thinking` switches the prompt-side reasoning flag.
    """

    temperature: float = 0.0
    max_new_tokens: int = 1024
    num_return_sequences: int = 1
    beam_width: int | None = None
    thinking: str = "think"
    stop: tuple[str, ...] = ()
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.num_return_sequences < 1:
            raise ValueError("num_return_sequences must be >= 1")
        if (self.beam_width is not None
                and self.beam_width < self.num_return_sequences):
            raise ValueError(
                "beam_width must cover num_return_sequences"
            )
        if self.thinking not in ("think", "no_think"):
            raise ValueError(f"bad thinking mode {self.thinking!r}")


@dataclass(frozen=True)
class EndpointConfig:
    """Where and how to reach a served model."""

    base_url: str
    model: str
    token_env: str | None = None
    timeout: float = 60.0
    max_in_flight: int = 4
    retries: int = 2
    backoff: float = 0.25

    def __post_init__(self):
        if self.max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")


@dataclass
class ModelResponse:
    """Texts for one request, in the order the endpoint returned them."""

    texts: list[str]
    latency: float
    usage: dict | None = None
    cache_hit: bool = False


__all__ = ["GenParams", "EndpointConfig", "ModelResponse"]
