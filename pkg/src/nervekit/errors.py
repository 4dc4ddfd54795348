"""Exception types shared across the package."""

from __future__ import annotations


class NervekitError(Exception):
    """Base class for all errors raised by nervekit."""


class ComplexError(NervekitError, ValueError):
    """Invalid simplicial complex input (empty simplex, bad vertex, ...)."""


class FieldError(NervekitError, ValueError):
    pass


class DimensionError(NervekitError, ValueError):
    pass


class NotACycleError(NervekitError, ValueError):
    pass


class PreconditionError(NervekitError, ValueError):
    """A checker was called on input outside the theorem's stated range."""


class CarrierError(PreconditionError):
    """The acyclicity needed to extend a chain map fails at ``simplex``."""

    def __init__(self, message: str, simplex: tuple[int, ...] | None = None):
        super().__init__(message)
        self.simplex = simplex


class TheoremViolation(NervekitError, AssertionError):
    """All hypotheses of a proved statement passed but its conclusion failed.

    This must never be raised on correct code; the test-suite asserts its
    absence. ``details`` carries the offending report for post-mortem.
    """

    code = "THEOREM_VIOLATION"

    def __init__(self, theorem: str, message: str, details: object = None):
        super().__init__(f"{self.code} [{theorem}]: {message}")
        self.theorem = theorem
        self.details = details


class DocumentError(NervekitError, ValueError):
    """Malformed complex/cover document. ``code`` is a stable identifier."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
