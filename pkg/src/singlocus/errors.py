"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's documented domain."""


class ConsistencyError(RuntimeError):
    """An internal identity failed; signals a broken convention, not bad input."""


class SingularPointError(ArithmeticError):
    """Fractional-linear action undefined: C*Z + D is singular at this point."""


class InconclusiveError(RuntimeError):
    """A verification run produced no usable samples."""
