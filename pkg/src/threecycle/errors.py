"""Exception types shared across the package."""


class PermutationError(ValueError):
    """The input is not a valid permutation (or cannot be parsed as one)."""


class MembershipError(ValueError):
    """A permutation fails the class precondition of an operation."""


class ResourceLimitError(RuntimeError):
    """An exhaustive-search request exceeds the configured size bounds."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee was violated; indicates a bug, not bad input."""
