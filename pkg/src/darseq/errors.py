"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: parse errors 2, validation errors 3,
verification failures 4, mathematically infeasible requests 5.
"""


class DarseqError(Exception):
    """Base class for all package errors."""


class ParseError(DarseqError):
    """An input file could not be parsed; carries line information."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(DarseqError):
    """Well-formed input violating a structural invariant."""


class VerificationFailed(DarseqError):
    """A runtime gate failed: either bad input or an internal bug."""


class NotClusterTilting(VerificationFailed):
    """A subcategory failed one of the certifiable cluster-tilting axioms."""


class LiftFailed(VerificationFailed):
    """A lifting equation had no solution where theory promises one."""


class NonSplitEndomorphismRing(DarseqError):
    """Decomposition cannot be certified over this ground field."""


class InfiniteDimensional(DarseqError):
    """Path enumeration for a quotient algebra did not die out in bound."""


class BoundExceeded(DarseqError):
    """An orbit or enumeration exceeded its configured bound."""


class NoSuchSequence(DarseqError):
    """No d-Auslander-Reiten sequence exists for the requested end term."""


class NotExact(DarseqError):
    """A complex expected to be exact is not."""
