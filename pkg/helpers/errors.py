# -------------------------------------------------
# Exception hierarchy shared by every module.
# The runner maps these onto exit codes.
# -------------------------------------------------


class SubspaceCodeError(Exception):
    """Root of all errors raised by this project."""


class DimensionMismatchError(SubspaceCodeError, ValueError):
    """Row length, ambient dimension or matrix shape does not match."""


class NotInSpanError(SubspaceCodeError, ValueError):
    """A field element has no coordinates with respect to the given basis."""


class InvalidConstructionError(SubspaceCodeError, ValueError):
    """Inputs to a construction violate its preconditions."""


class InfeasibleCountError(SubspaceCodeError, ValueError):
    """A counting argument produced a negative or non-integral quantity."""


class SearchBudgetExceeded(SubspaceCodeError):
    """
    A search ran out of time.

    @param message: Human readable reason.
    @param best: The best partial result found before the budget ran out (may be None).
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class CodeFileParseError(SubspaceCodeError, ValueError):
    """
    A CodeFile could not be parsed.

    @param message: What went wrong.
    @param line_no: 1-based line number of the offending line (0 if not line specific).
    """

    def __init__(self, message: str, line_no: int = 0):
        super().__init__(f"line {line_no}: {message}" if line_no else message)
        self.line_no = line_no


class VerificationError(SubspaceCodeError):
    """A code could not be certified."""
