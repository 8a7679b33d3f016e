"""Exception hierarchy shared by the library and the CLI."""


class IncidenceColoringError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(IncidenceColoringError, ValueError):
    """Malformed edge-list input or an invalid simple graph."""


class ColoringMismatchError(IncidenceColoringError, ValueError):
    """A coloring does not cover exactly the incidences of a graph."""


class LatinSquareError(IncidenceColoringError, ValueError):
    """Requested square does not exist or an input is not Latin."""


class UnsupportedGraphError(IncidenceColoringError):
    """No constructive route (and no affordable exact search) covers the graph."""


class ExtensionError(IncidenceColoringError):
    """A reduction step could not be undone by local recoloring."""


class BudgetExceeded(IncidenceColoringError):
    """An exact search ran out of its node budget before deciding."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


class VerificationFailure(IncidenceColoringError):
    """A constructed coloring failed its own verification (always a bug)."""
