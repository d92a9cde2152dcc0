"""
Exception hierarchy for the metaplectic Whittaker toolkit

Two families matter to callers: InvalidInput (bad parameters, the CLI exits 1)
and InvariantViolation (a computed identity failed, the CLI exits 2).
"""
from typing import List, Optional


class WhittakerError(Exception):
    """Base class for every error raised by this package"""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict:
        """Structured form used by the CLI error object"""
        return {
            'type': type(self).__name__,
            'message': self.message,
            'details': self.details,
        }


class InvalidInput(WhittakerError, ValueError):
    """Parameters that cannot be computed with"""


class InvalidFieldConfig(InvalidInput):
    """q is not an odd prime power >= 3"""


class DimensionMismatch(InvalidInput):
    """Objects of different rank n were combined"""


class InvalidJobConfig(InvalidInput):
    """A CLI job failed validation"""

    def __init__(self, errors: List[str], warnings: Optional[List[str]] = None):
        super().__init__(
            f"Invalid job configuration: {'; '.join(errors)}",
            details={'errors': list(errors), 'warnings': list(warnings or [])},
        )
        self.errors = list(errors)


class InvariantViolation(WhittakerError, AssertionError):
    """A mathematical identity that must hold did not"""


class NonDivisible(InvariantViolation):
    """Polynomial division by the Weyl denominator left a remainder"""


class NotAlternating(InvariantViolation):
    """Polynomial is not anti-invariant under the simple reflections"""


class TwistNotUnramified(WhittakerError):
    """Quadratic twist by a class containing pi leaves the unramified family"""


class UnsupportedRank(WhittakerError, ValueError):
    """Operation is only defined for one parity of n"""
