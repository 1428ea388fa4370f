"""Shared exception types."""


class RingSpectraError(Exception):
    pass


class ValidationError(RingSpectraError):
    """Input data fails a structural invariant (non-associative constants, ...)."""


class CapabilityError(RingSpectraError):
    """The question is well posed but outside desk-scale decidability.

    Raised instead of guessing: infinite submodule lattices over Q,
    unfactorable quartics, unresolved division algebras, graded backends
    without the hypotheses a construction needs.
    """


class BudgetExceeded(RingSpectraError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, what, needed, allowed):
        super().__init__(f"{what}: needs {needed}, budget allows {allowed}")
        self.what = what
        self.needed = needed
        self.allowed = allowed
