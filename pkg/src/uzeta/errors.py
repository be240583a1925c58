"""Shared exception types."""


class TruncationError(Exception):
    """A computation needs more degree budget than the configured bound."""


class InconclusiveError(Exception):
    """A windowed check cannot decide at the given window size."""
