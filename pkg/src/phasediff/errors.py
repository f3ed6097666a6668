"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class TruncationError(RuntimeError):
    """A truncated series failed its tail or self-consistency bound."""


class ConsistencyError(ValueError):
    """Bath moments violate the squeeze-frame consistency condition."""
