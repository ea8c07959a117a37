"""Shared error types."""


class InputError(ValueError):
    """Malformed user input (files, CLI arguments, JSON documents)."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
