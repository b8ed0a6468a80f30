"""Exceptions shared across the package."""


class DomainError(ValueError):
    """Base class for mathematical precondition failures (CLI exit code 3)."""


class NotAUnitError(DomainError):
    """Raised when an operation needs f(0) != 0 (or f(1) != 0 on the Dirichlet side)."""


class NotInvertibleInRingError(DomainError):
    """Raised when f(0) is a nonzero but non-invertible coefficient (non-constant polynomial)."""


class RootNotRepresentableError(DomainError):
    """Raised when f(0) has no exact rational m-th root."""


class DepthMismatchError(DomainError):
    """Raised when a binary operation receives truncated sequences of unequal depth."""


class BoundMismatchError(DomainError):
    """Raised when a Dirichlet operation receives sequences of unequal bound."""
