class BiquandleError(Exception):
    """Base class for every error raised by this package."""


class TableError(BiquandleError, ValueError):
    """Malformed input: wrong shape, out-of-range entry, bad parameters."""


class AxiomError(BiquandleError, ValueError):
    """Well-formed input that fails the axioms of the requested structure."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapExceeded(BiquandleError, ValueError):
    """A search was refused because a configured size bound tripped."""


class ConsistencyError(BiquandleError, AssertionError):
    """An internal self-check failed; an identity the code relies on did not hold."""
