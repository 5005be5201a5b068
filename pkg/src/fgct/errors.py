"""Exception hierarchy.

Three tiers, matching the CLI exit-code contract:
  * InputError        -- malformed input objects (exit 1)
  * HypothesisError   -- valid objects that violate a precondition (exit 2)
  * TheoremViolation  -- an internal consistency check failed; these are
                         asserted facts, so any instance is a bug (exit 3)
"""


class FgctError(Exception):
    pass


class InputError(FgctError):
    pass


class HypothesisError(FgctError):
    pass


class TheoremViolation(FgctError):
    pass


# --- input / construction errors ---

class NonAssociative(InputError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"multiplication not associative at triple {triple}")


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class UnknownCatalogEntry(InputError):
    pass


class InvalidAction(InputError):
    pass


class HandleMismatch(InputError):
    pass


class SelectorError(InputError):
    pass


# --- hypothesis violations ---

class OrderCapExceeded(HypothesisError):
    pass


class NotNormal(HypothesisError):
    pass


class NotCoprime(HypothesisError):
    pass


class NotInvariant(HypothesisError):
    pass


class NotCyclic(HypothesisError):
    pass


class NotIrreducible(HypothesisError):
    pass


class NotGenuineCharacter(HypothesisError):
    pass


class NotChief(HypothesisError):
    pass


class NotSemiInvariantError(HypothesisError):
    pass


class FormUndefined(HypothesisError):
    pass


class HypothesisViolated(HypothesisError):
    pass


class StabilizerMismatch(HypothesisError):
    pass


class EvenOrder(HypothesisError):
    pass


class DivisionByZero(FgctError, ZeroDivisionError):
    pass


# --- theorem violations (internal errors) ---

class NotBijective(TheoremViolation):
    pass


class NonUnique(TheoremViolation):
    pass


class NoneCanonical(TheoremViolation):
    pass


class MultipleCanonical(TheoremViolation):
    pass


class NotAMatching(TheoremViolation):
    pass


class NoSolution(TheoremViolation):
    pass


class InternalCheckFailed(TheoremViolation):
    pass
