"""Exception hierarchy shared by all modules.

The CLI maps these onto process exit codes: configuration / input problems
(exit 2) are kept distinct from insufficient-data and non-convergence
conditions (exit 3) and from hard numerical failures (exit 4).
"""


class RabiChirpError(Exception):
    """Base class for all library errors."""


class ConfigurationError(RabiChirpError):
    """Invalid parameter values, configuration keys, or option names."""


class GenerationError(ConfigurationError):
    """Synthetic-trace request produced an invalid (negative) Poisson rate."""


class TraceParseError(ConfigurationError):
    """Malformed trace file; carries the 1-based offending line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class AnalysisError(RabiChirpError):
    """Not enough structure in the data: too few peaks, extrema, or bins."""


class InitializationError(AnalysisError):
    """Degenerate trace; no usable starting point can be derived."""


class NumericalError(RabiChirpError):
    """Hard numerical failure: singular system, NaN, quadrature blow-up."""
