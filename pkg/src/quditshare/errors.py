"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(ToolkitError, ValueError):
    """Invalid or mismatched Hilbert-space dimensions."""


class InvalidOperatorError(ToolkitError, ValueError):
    """An operator fails a structural requirement (unitarity, Hermiticity, ...)."""


class ChannelCompletenessError(ToolkitError, ValueError):
    """Kraus operators do not sum to the identity; carries the residual."""

    def __init__(self, message, residual, position=None):
        super().__init__(message)
        self.residual = float(residual)
        self.position = position


class ParameterError(ToolkitError, ValueError):
    """A parameter violates its admissible range; the message names the clause."""
