"""Exception hierarchy for the kernel.

Every failure carries a stable ``code`` which the command line front end
prints verbatim in its JSON error payload.
"""

from typing import Any


class TwinCityError(Exception):
    """Base class of all kernel errors."""

    code: str = "TwinCityError"

    def __init__(self, detail: str = "", **context: Any) -> None:
        super().__init__(detail or self.code)
        self.detail = detail
        self.context = context

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"error": self.code, "detail": self.detail}
        for key, value in self.context.items():
            if value is not None:
                payload[key] = value
        return payload


class InputError(TwinCityError, ValueError):
    """Malformed or invalid input data."""

    code = "InputError"


class MathematicalError(TwinCityError):
    """A well-formed request with no mathematical answer of the requested kind."""

    code = "MathematicalError"


class InternalError(TwinCityError, RuntimeError):
    """An algorithm left its expected operating envelope."""

    code = "InternalError"


class EntryError(InputError):
    """Input error pointing at a matrix entry (1-based row and column)."""

    def __init__(
        self, detail: str = "", *, row: int | None = None, column: int | None = None
    ) -> None:
        super().__init__(detail, row=row, column=column)
        self.row = row
        self.column = column


class ParseError(EntryError):
    code = "ParseError"


class DeterminantNotOne(InputError):
    code = "DeterminantNotOne"


class NonSplitDenominator(EntryError):
    code = "NonSplitDenominator"


class PoleOnCircle(EntryError):
    code = "PoleOnCircle"


class RankMismatch(InputError):
    code = "RankMismatch"


class ZeroInput(InputError):
    code = "ZeroInput"


class FieldMismatch(InputError):
    code = "FieldMismatch"


class DegenerateFlag(InputError):
    code = "DegenerateFlag"


class SignMismatch(MathematicalError):
    code = "SignMismatch"


class WrongRegularity(MathematicalError):
    code = "WrongRegularity"


class DifferentComponents(MathematicalError):
    code = "DifferentComponents"


class NotOpposite(MathematicalError):
    code = "NotOpposite"


class EmptyPool(MathematicalError):
    code = "EmptyPool"


class NotFound(MathematicalError):
    code = "NotFound"


class InsufficientPrecision(InternalError):
    code = "InsufficientPrecision"


class NonTerminating(InternalError):
    code = "NonTerminating"


class PrecisionCapExceeded(InternalError):
    code = "PrecisionCapExceeded"


class IntervalPrecisionExceeded(InternalError):
    code = "IntervalPrecisionExceeded"


class InvalidWindow(InputError):
    code = "InvalidWindow"


class NotMonomial(InputError):
    code = "NotMonomial"
