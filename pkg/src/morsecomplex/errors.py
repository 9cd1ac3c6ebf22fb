"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: budget errors exit 2,
hypothesis violations exit 3, input problems exit 4.
"""


class MorseError(Exception):
    """Base class for all package errors."""


class MalformedInputError(MorseError):
    """Structurally invalid input (duplicate vertex in a simplex, loop edge, ...)."""


class NotAFaceError(MorseError):
    """A simplex was required to be a face of a complex but is not."""


class ParseError(MorseError):
    """Text input could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EnumerationBudgetError(MorseError):
    """A facet-count or time budget was exceeded; no partial result is returned."""


class HypothesisViolationError(MorseError):
    """A theorem hypothesis required by the operation does not hold for the input."""


class TheoremContradictionError(MorseError):
    """An internal consistency check guaranteed by a theorem failed.

    Seeing this means either a bug or an input object that is not what it
    claims to be (e.g. an invalid isomorphism smuggled past validation).
    """


class InvalidIsomorphismError(MorseError):
    """A mapping presented as a simplicial isomorphism is not one."""
