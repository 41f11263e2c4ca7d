"""Data models for the ring layer."""

import math
from enum import Enum

from twincity.models import Sign


class FieldKind(Enum):
    """Ground field tags."""

    FP = "Fp"
    RATIONAL = "Q"
    GAUSSIAN = "QI"


class RegularityClass(Enum):
    """Pole-location class of a loop matrix.

    Algebraic matrices have no poles in C*; PlusOnly matrices only have poles
    outside the closed unit disk (they extend holomorphically across it),
    MinusOnly matrices only inside it.
    """

    ALGEBRAIC = "Algebraic"
    PLUS_ONLY = "PlusOnly"
    MINUS_ONLY = "MinusOnly"
    NEITHER = "Neither"

    def admits(self, sign: Sign) -> bool:
        """Whether the matrix lies in the standard subgroup of the given sign."""
        if self is RegularityClass.ALGEBRAIC:
            return True
        if sign is Sign.PLUS:
            return self is RegularityClass.PLUS_ONLY
        return self is RegularityClass.MINUS_ONLY


# Annulus grades are natural numbers or infinity.
Grade = int | float
INFINITE_GRADE: Grade = math.inf


def format_grade(grade: Grade) -> int | str:
    """JSON rendering of a grade: an integer or the string "inf"."""
    return "inf" if grade == INFINITE_GRADE else int(grade)
