"""Shared exception types."""

from __future__ import annotations


class CapExceededError(RuntimeError):
    """An exhaustive sweep would exceed the configured vertex cap."""


class InputFormatError(ValueError):
    """A text input failed to parse; the message carries the line number."""
