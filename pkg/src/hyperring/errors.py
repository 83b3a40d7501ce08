"""Exception taxonomy for hyperring validation and predicates.

Validation errors carry a ``witness`` attribute holding the offending
element tuple so that a rejection can be replayed against the tables.
"""

from __future__ import annotations


class HyperringError(Exception):
    """Base class for all library errors."""


class ValidationError(HyperringError):
    """An axiom of a hyperring (or derived structure) failed.

    ``witness`` is a tuple of carrier elements at which the axiom breaks.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NotAGroup(ValidationError):
    """The addition table is not an abelian group."""


class EmptyHyperproduct(ValidationError):
    """Some hyperoperation cell is the empty set."""


class NonAssociative(ValidationError):
    """The hyperoperation fails associativity at the witness triple."""


class SignRuleViolation(ValidationError):
    """x o (-y) differs from -(x o y) at the witness pair."""


class NonDistributive(ValidationError):
    """x o (y+z) is not a subset of x o y + x o z at the witness triple."""


class IllDefinedOperation(ValidationError):
    """A quotient-style induced operation depends on representatives."""


# Alias used by the fundamental-ring construction.
IllDefinedQuotient = IllDefinedOperation


class NotAnEquivalence(ValidationError):
    """The localization relation is not transitive at the witness triple."""


class NotClosed(ValidationError):
    """A denominator set is not multiplicatively closed."""


class ImproperIdeal(HyperringError):
    """A predicate that requires a proper hyperideal got the full carrier."""


class BadQuery(HyperringError):
    """An absorbing query violates u > v >= 1."""


class AbsUndefined(HyperringError):
    """abs(Q) requested while Abs(Q) is infinite (bound reported)."""


class EmptyOperand(HyperringError):
    """A subset hyperproduct received an empty operand."""


class NoMaximalIdeal(HyperringError):
    """The ring has no maximal hyperideal (degenerate)."""


class DegreeOverflow(HyperringError):
    """A monomial product exceeds the configured degree bound."""


class BudgetExceeded(HyperringError):
    """A construction or scan exceeds its configured size budget."""


class PreconditionUnmet(HyperringError):
    """A transport theorem precondition does not hold; names the condition."""


class FixpointNotReached(HyperringError):
    """A product/sum class cache failed to stabilize within its cap."""


class UnknownTheorem(HyperringError):
    """No registry entry with the requested id."""


class BadSpec(HyperringError):
    """An instance-stream specification is malformed."""
