"""Exception hierarchy shared by all hilbreg modules."""


class HilbertError(Exception):
    """Base class for every error raised by hilbreg."""


class ParseError(HilbertError):
    """Malformed polynomial, ideal or batch input.

    ``pos`` is the 0-based character offset of the offending token, when known.
    """

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class PreconditionError(HilbertError):
    """An operation was called on a value outside its domain."""


class NotNonnegative(HilbertError):
    """The series has a negative coefficient."""


class NoPresentation(HilbertError):
    """No (n, k)-boundary presentation of the series exists."""


class InvalidMove(HilbertError):
    """A reduction or expansion move is not applicable to this presentation."""


class InfiniteDelta(HilbertError):
    """The lowest nonvanishing coefficient is negative, so no denominator power helps."""


class BudgetExceeded(HilbertError):
    """A semi-decision search ran past its budget."""


class TooManyGenerators(HilbertError):
    """Monomial ideal exceeds the inclusion-exclusion generator cap."""
