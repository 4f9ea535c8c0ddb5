from typing import Any, Dict, Optional


class GroupoidCardError(Exception):
    """Base class for every error raised by the toolkit"""

    error = "Computation failed"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.error,
            "details": {"message": self.message, **self.details},
        }


class ValidationError(GroupoidCardError):
    """An input violates an invariant or exceeds a configured cap"""

    error = "Validation failed"


class InvalidTable(ValidationError):
    error = "Invalid Cayley table"


class NotAssociative(ValidationError):
    error = "Operation is not associative"


class NotLatinSquare(ValidationError):
    error = "Table is not a Latin square"


class NoIdentity(ValidationError):
    error = "Table has no identity element"


class NoInverse(ValidationError):
    error = "Element has no inverse"


class NotAHomomorphism(ValidationError):
    error = "Map is not a group homomorphism"


class NotNormal(ValidationError):
    error = "Subgroup is not normal"


class GroupTooLarge(ValidationError):
    error = "Group exceeds the configured order cap"


class DegreeTooLarge(ValidationError):
    error = "Permutation degree exceeds the configured cap"


class InvalidGroupoid(ValidationError):
    error = "Invalid groupoid"


class InvalidFunctor(ValidationError):
    error = "Invalid functor"


class InvalidAction(ValidationError):
    error = "Invalid group action"


class SizeLimit(ValidationError):
    error = "Enumeration exceeds the configured size limit"


class ExpNonzeroConstant(ValidationError):
    error = "exp needs a series with zero constant term"


class NotPrimePower(ValidationError):
    error = "Field size is not a prime power"


class BaseMismatch(ValidationError):
    error = "Objects live over different base groups"


class SignatureMismatch(ValidationError):
    error = "Structures have different signatures"


class InvalidStructure(ValidationError):
    error = "Invalid relational structure"


class InvalidPartition(ValidationError):
    error = "Invalid partition"


class UniverseTooLarge(ValidationError):
    error = "Universe exceeds the configured cap"


class PreconditionUnmet(ValidationError):
    error = "Theorem precondition not met"


class TheoremViolation(GroupoidCardError):
    """A verified statement failed on a concrete instance"""

    error = "Theorem assertion failed"
