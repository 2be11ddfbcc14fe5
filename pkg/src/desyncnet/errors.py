"""Exception types shared across the package."""


class DesyncError(Exception):
    """Base class for all package-specific errors."""


class ConstraintViolationError(DesyncError, ValueError):
    """A parameter combination violates a structural constraint
    (e.g. a cubic interaction whose derivative is not strictly positive)."""


class OrderingViolationError(DesyncError, ValueError):
    """A difference-coordinate state left the strictly ordered region."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class ConvergenceError(DesyncError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class ResourceLimitError(DesyncError, RuntimeError):
    """A simulation exceeded its event budget."""


class ConfigError(DesyncError, ValueError):
    """A scenario configuration failed validation.

    ``field`` holds a dotted path into the offending config entry.
    """

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
