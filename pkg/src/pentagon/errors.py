"""Exception types shared across the package."""


class PentagonError(Exception):
    """Base class for all package-specific errors."""


class ParseError(PentagonError):
    """Malformed input file. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructureError(PentagonError):
    """A structural precondition failed (e.g. a forbidden cycle is present).

    ``witness`` holds a concrete certificate when one is available, such as
    the vertex sequence of an offending cycle or an unclassifiable block.
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {witness})"
        super().__init__(message)


class BudgetError(PentagonError):
    """An exhaustive routine was asked to exceed its hard size guard."""
