"""Exception hierarchy shared by all polycollatz modules."""


class PolyCollatzError(Exception):
    """Base class for every error raised by this package."""


class ZeroInput(PolyCollatzError, ValueError):
    """The operation is undefined on the zero polynomial."""


class OddInput(PolyCollatzError, ValueError):
    """An even polynomial was required."""


class EvenInput(PolyCollatzError, ValueError):
    """An odd polynomial was required."""


class BudgetExhausted(PolyCollatzError, RuntimeError):
    """An iteration did not terminate within its step budget."""

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class InsufficientTerms(PolyCollatzError, ValueError):
    """Fewer terms exist than were requested."""


class DomainTooSmall(PolyCollatzError, ValueError):
    """Parameters fall outside the hypotheses of an identity."""


class CapExceeded(PolyCollatzError, ValueError):
    """A sweep was requested beyond the configured degree cap."""


class PolySyntaxError(PolyCollatzError, ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DuplicateTerm(PolySyntaxError):
    """The same monomial appears twice in symbolic input."""
