"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed or out-of-contract input."""


class DegenerateInputError(InvalidInputError):
    """The operation needs a full-dimensional polygon."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds the configured safety limits."""
