"""Exception types shared across the package."""


class QpgError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QpgError, ValueError):
    """An argument lies outside the physically or numerically valid range."""


class GridMismatchError(QpgError, ValueError):
    """Two spectral objects that must share a frequency grid do not."""


class TruncationError(QpgError):
    """A mode does not fit on its grid; carries the measured lost norm."""

    def __init__(self, message, lost_norm):
        super().__init__(message)
        self.lost_norm = lost_norm


class WindowError(QpgError):
    """Kernel mass touches the grid boundary; the window misses the ridge."""

    def __init__(self, message, boundary_fraction):
        super().__init__(message)
        self.boundary_fraction = boundary_fraction


class NoConversionError(QpgError):
    """Requested a coupling for a mode with zero Schmidt coefficient."""


class NoHeraldError(QpgError):
    """Conversion matrix is identically zero; nothing can herald."""


class ScenarioError(QpgError):
    """Scenario fails validation; carries a machine-readable code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class ScenarioParseError(ScenarioError):
    """Scenario file cannot be read or parsed at all."""
