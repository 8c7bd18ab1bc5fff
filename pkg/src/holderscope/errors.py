"""Exception types shared across the package."""


class HolderscopeError(Exception):
    """Base class for all errors raised by holderscope."""


class DomainError(HolderscopeError, ValueError):
    """An argument value lies outside the operation's domain."""


class RangeError(HolderscopeError, ValueError):
    """An index, scale, or ball falls outside the tabulated/sampled range."""


class PreconditionError(HolderscopeError, ValueError):
    """A documented hypothesis of the operation is not met."""


class InsufficientDataError(HolderscopeError, ValueError):
    """Too few scales or samples to produce a meaningful result."""


class FamilyConsistencyError(HolderscopeError, RuntimeError):
    """A sequence family violated the monotonicity it was declared to have."""


class ConvergenceError(HolderscopeError, RuntimeError):
    """An iterative solver failed to converge."""
