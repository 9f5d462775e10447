"""Shared exception types."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """A graph document cannot be parsed: malformed JSON, missing keys,
    duplicate ids, or dangling references."""


class InvalidGraphError(ValueError):
    """A structurally parsed graph violates an invariant required by an
    operation (non-involutive maps, incompatible incidence, a fixed edge
    with exchanged endpoints, disconnectedness, ...)."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        msg = "; ".join(f"{code}: {text}" for code, text in self.violations)
        super().__init__(msg or "invalid graph")


class CapExceededError(RuntimeError):
    """An enumeration exceeded its configured size cap."""
