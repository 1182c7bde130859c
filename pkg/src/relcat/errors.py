"""Exception hierarchy.

Structural problems (malformed data, out-of-range indices) raise
InvalidStructure or DocumentError.  Violated preconditions of conversions
and constructions raise subclasses of AxiomError; each instance carries the
name of the failed law and a concrete witness so that callers can report
counterexamples instead of bare booleans.
"""

from __future__ import annotations


class RelcatError(Exception):
    """Base class for all library errors."""


class InvalidStructure(RelcatError):
    """A structure value is malformed (bad indices, inconsistent fields)."""


class DocumentError(RelcatError):
    """An interchange document cannot be parsed or validated."""


class SizeLimitExceeded(RelcatError):
    """An enumeration or lifting request exceeds the configured guard."""


class CarrierTooLarge(SizeLimitExceeded):
    """Powerset lifting was requested for a carrier above the 2**n guard."""


class AxiomError(RelcatError):
    """A required law fails; `law` names it, `witness` exhibits the failure."""

    def __init__(self, law: str, witness=None, message: str | None = None):
        self.law = law
        self.witness = witness
        text = message or law
        if witness is not None:
            text = f"{text}; witness: {witness!r}"
        super().__init__(text)


class NotWeaklyFunctional(AxiomError):
    """Some operand pair has more than one composition result."""

    def __init__(self, witness=None):
        super().__init__("weak-functionality", witness)


class NotRelationalMonoid(AxiomError):
    pass


class NotPartialMonoid(AxiomError):
    pass


class NotObjectFreeCategory(AxiomError):
    pass


class NotWeakCoherentPartialMonoid(AxiomError):
    pass


class LrAxiomViolation(AxiomError):
    pass


class CategoryAxiomViolation(AxiomError):
    pass


class CategoricalSemigroupAxiomViolation(AxiomError):
    pass


class InvariantViolation(RelcatError):
    """A law that is a theorem for validated inputs failed; indicates a bug."""
