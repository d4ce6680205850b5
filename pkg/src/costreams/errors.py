"""Exceptions shared across the library and the CLI."""


class ArithmeticRangeError(ArithmeticError):
    """An arithmetic operation left its supported range.

    Raised instead of silently wrapping or producing a value the caller
    cannot trust (e.g. a factorial argument past the supported bound).
    """


class FuelExhaustedError(RuntimeError):
    """A search or scan consumed its fuel budget without an answer.

    Replaces divergence: operations that could loop forever on
    out-of-contract inputs stop after a bounded number of steps instead.
    """


class EngineMismatchError(ValueError):
    """A tail capability was handed to an engine that did not mint it."""
