"""Failure type shared by the instance-level checks."""

from __future__ import annotations


class InvariantViolation(AssertionError):
    """An exact check failed; ``details`` carries the counterexample."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
