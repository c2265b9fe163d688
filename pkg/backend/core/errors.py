"""
Errors

Exception hierarchy shared by the algebra engine. Axiom violations are never
raised; they are collected into reports.
"""


class WBAError(Exception):
    """Base class for engine failures."""


class FieldMismatchError(WBAError, TypeError):
    """Scalars or elements from different fields were combined."""


class DegreeOverflowError(WBAError):
    """A computation needs a degree above the truncation cutoff."""

    def __init__(self, degree: int, cutoff: int):
        super().__init__(f"degree {degree} exceeds cutoff {cutoff}")
        self.degree = degree
        self.cutoff = cutoff


class NotGroupLikeError(WBAError):
    """An operation required a right and left group-like element."""


class AlmostCentralityError(WBAError):
    """A denominator monoid does not commute past H as required, or is not closed under its automorphisms."""


class RegularityError(WBAError):
    """A denominator declared regular has a zero divisor, or has finite order."""


class IndeterminateError(WBAError):
    """Fraction equality could not be decided within the search limit."""


class LocalizationError(WBAError):
    """A fraction computation is outside what the current model supports."""


class CoidealError(WBAError):
    """An imposed relation set does not generate a coideal."""


class InvalidPathError(WBAError, ValueError):
    """A path is not a walk in the graph it was given for."""


class CatalogError(WBAError, ValueError):
    """Unknown example name or invalid example parameters."""


class DocumentError(WBAError, ValueError):
    """An input document does not validate or names unknown basis elements."""
