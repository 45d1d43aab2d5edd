"""Exception hierarchy.

``DomainError`` covers invalid mathematical input (CLI exit code 1),
``TheoremViolation`` covers internal consistency failures that should be
impossible for valid input (CLI exit code 3); the latter carry a
machine-readable ``details`` dict so they can be dumped as a report.
"""


class InvsemiError(Exception):
    pass


class DomainError(InvsemiError):
    """The request is well-formed but mathematically inadmissible."""


class EmptyInput(DomainError):
    pass


class InvalidGenerator(DomainError):
    pass


class GcdNotOne(DomainError):
    pass


class NotInSemigroup(DomainError):
    pass


class ZeroModulus(DomainError):
    pass


class NotApplicable(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class ZeroPolynomial(DomainError):
    pass


class DegreeZero(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class NotMember(DomainError):
    pass


class NotMinimalGlue(DomainError):
    pass


class MemberAlready(DomainError):
    pass


class NotInApery(DomainError):
    pass


class NotSymmetric(DomainError):
    pass


class MultiplicityOutOfRange(DomainError):
    pass


class BothOdd(DomainError):
    pass


class NotCoprimeAlphas(DomainError):
    pass


class AlphaTooSmall(DomainError):
    pass


class NotFourGenerated(DomainError):
    pass


class IsCompleteIntersection(DomainError):
    pass


class TheoremViolation(InvsemiError):
    """A verified identity failed.  Carries a machine-readable report."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = dict(details)


class NoShapeMatch(TheoremViolation):
    pass


class StructureNotFound(TheoremViolation):
    pass


class NoWitness(TheoremViolation):
    pass
