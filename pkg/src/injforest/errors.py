class DomainError(ValueError):
    """An argument violates the precondition of the operation it was passed to."""


class GuardError(RuntimeError):
    """A brute-force request exceeds its configured size guard."""


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""
