"""Benchmark-runner failure types."""


class BenchError(Exception):
    pass


class ConfigError(BenchError):
    """The benchmark configuration is unusable as written."""


__all__ = ["BenchError", "ConfigError"]
