"""Rational functions with completely split denominators.

A :class:`RationalFunction` is ``numerator / prod (t - c)^k`` where the
numerator is a Laurent polynomial and the roots ``c`` are nonzero Gaussian
rationals. The form is kept reduced: no pole root is a zero of the
numerator.
"""

import logging
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from twincity.errors import FieldMismatch, ZeroInput
from twincity.models import Place
from twincity.ring.laurent import LaurentPoly
from twincity.ring.scalars import (
    Scalar,
    ScalarField,
    format_scalar,
    join_fields,
    modulus_squared,
    sort_key,
)

logger = logging.getLogger(__name__)

Pole = tuple[Scalar, int]


def _merge_poles(poles: Iterable[Pole]) -> dict[Scalar, int]:
    merged: dict[Scalar, int] = {}
    for root, order in poles:
        if order:
            merged[root] = merged.get(root, 0) + order
    return merged


class RationalFunction:
    """Immutable element of the function field with split denominator."""

    __slots__ = ("numerator", "poles", "field", "_hash")

    def __init__(
        self,
        numerator: LaurentPoly,
        poles: Iterable[Pole] = (),
        field: ScalarField | None = None,
    ) -> None:
        field = field or numerator.field
        orders = _merge_poles(poles)
        if orders and field.is_finite:
            raise FieldMismatch(f"Poles are not supported over {field.tag}")
        for root in orders:
            if not root:
                raise ZeroInput("A pole root must be nonzero")
        numerator, orders = _reduce(numerator, orders)
        self.numerator = numerator
        self.poles: tuple[Pole, ...] = tuple(
            sorted(orders.items(), key=lambda item: sort_key(item[0]))
        )
        self.field = field
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_laurent(cls, poly: LaurentPoly) -> "RationalFunction":
        return cls(poly)

    @classmethod
    def constant(cls, value: Any, field: ScalarField) -> "RationalFunction":
        return cls(LaurentPoly.constant(value, field))

    @classmethod
    def zero(cls, field: ScalarField) -> "RationalFunction":
        return cls(LaurentPoly.zero(field))

    @classmethod
    def one(cls, field: ScalarField) -> "RationalFunction":
        return cls.constant(1, field)

    @classmethod
    def monomial(cls, exponent: int, field: ScalarField, coefficient: Any = 1) -> "RationalFunction":
        return cls(LaurentPoly.monomial(exponent, field, coefficient))

    @classmethod
    def simple_pole(cls, root: Any, field: ScalarField, coefficient: Any = 1) -> "RationalFunction":
        """coefficient / (t - root)."""
        return cls(LaurentPoly.constant(coefficient, field), [(field.convert(root), 1)], field)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.numerator.is_zero()

    @property
    def is_laurent(self) -> bool:
        return not self.poles

    @property
    def pole_degree(self) -> int:
        """Degree of the (monic) denominator."""
        return sum(order for _, order in self.poles)

    def denominator(self) -> LaurentPoly:
        result = LaurentPoly.constant(1, self.field)
        for root, order in self.poles:
            result = result * LaurentPoly.linear_power(root, order, self.field)
        return result

    def denominator_at_zero(self) -> Scalar:
        value = self.field.one
        for root, order in self.poles:
            value = value * (-root) ** order
        return value

    def pole_moduli_squared(self) -> list[Fraction]:
        return [modulus_squared(root) for root, _ in self.poles]

    def val(self, place: Place) -> int:
        """Order of vanishing at 0 or at infinity."""
        if self.is_zero():
            raise ZeroInput("Valuation of the zero function")
        if place is Place.ZERO:
            return self.numerator.valuation()
        return self.pole_degree - self.numerator.degree()

    def leading_term(self, place: Place) -> tuple[int, Scalar]:
        """First nonzero term (t-exponent, coefficient) of the expansion at the place."""
        if self.is_zero():
            raise ZeroInput("Leading term of the zero function")
        if place is Place.ZERO:
            exponent, coefficient = self.numerator.lowest_term()
            return exponent, coefficient / self.denominator_at_zero()
        exponent, coefficient = self.numerator.highest_term()
        return exponent - self.pole_degree, coefficient

    def evaluate(self, point: Scalar) -> Scalar:
        denominator = self.denominator().evaluate(point)
        if not denominator:
            raise ZeroInput(f"Evaluation at a pole {format_scalar(self.field, point)}")
        return self.numerator.evaluate(point) / denominator

    def local_term(self, root: Scalar) -> tuple[int, Scalar]:
        """Order at a nonzero point and the leading coefficient in powers of (t - root)."""
        if self.is_zero():
            raise ZeroInput("Local expansion of the zero function")
        numerator = self.numerator
        order = 0
        while not numerator.evaluate(root):
            numerator = numerator.divide_linear(root)
            order += 1
        value = numerator.evaluate(root)
        for pole, multiplicity in self.poles:
            if pole == root:
                order -= multiplicity
            else:
                value = value / self.field.power(root - pole, multiplicity)
        return order, value

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: Any) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        return RationalFunction.constant(other, self.field)

    def __add__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        field = join_fields(self.field, other.field)
        mine = dict(self.poles)
        theirs = dict(other.poles)
        common = {root: max(mine.get(root, 0), theirs.get(root, 0)) for root in {*mine, *theirs}}
        left = self.numerator
        right = other.numerator
        for root, order in common.items():
            left = left * LaurentPoly.linear_power(root, order - mine.get(root, 0), field)
            right = right * LaurentPoly.linear_power(root, order - theirs.get(root, 0), field)
        return RationalFunction(left + right, common.items(), field)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.poles, self.field)

    def __sub__(self, other: Any) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "RationalFunction":
        if not isinstance(other, RationalFunction | LaurentPoly):
            return self.scale(other)
        other = self._coerce(other)
        field = join_fields(self.field, other.field)
        return RationalFunction(
            self.numerator * other.numerator, [*self.poles, *other.poles], field
        )

    __rmul__ = __mul__

    def scale(self, factor: Any) -> "RationalFunction":
        return RationalFunction(self.numerator.scale(factor), self.poles, self.field)

    def shift(self, k: int) -> "RationalFunction":
        """Multiply by t^k."""
        return RationalFunction(self.numerator.shift(k), self.poles, self.field)

    def substitute_inverse(self) -> "RationalFunction":
        """r(1/t); a pole at c moves to 1/c."""
        # (1/t - c) = -c * (t - 1/c) / t
        numerator = self.numerator.substitute_inverse().shift(self.pole_degree)
        constant = self.field.one
        for root, order in self.poles:
            constant = constant * (-root) ** order
        poles = [(self.field.inverse(root), order) for root, order in self.poles]
        return RationalFunction(numerator.scale(self.field.inverse(constant)), poles, self.field)

    # -- protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.numerator == other.numerator and self.poles == other.poles
        if isinstance(other, LaurentPoly | int):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.poles))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if not self.poles:
            return str(self.numerator)
        factors = []
        for root, order in self.poles:
            factor = f"(t - {format_scalar(self.field, root)})"
            factors.append(factor if order == 1 else f"{factor}^{order}")
        return f"({self.numerator}) / {'*'.join(factors)}"


def _reduce(numerator: LaurentPoly, orders: dict[Scalar, int]) -> tuple[LaurentPoly, dict[Scalar, int]]:
    """Cancel common linear factors of numerator and denominator."""
    if numerator.is_zero():
        return numerator, {}
    reduced: dict[Scalar, int] = {}
    for root, order in orders.items():
        while order and not numerator.evaluate(root):
            numerator = numerator.divide_linear(root)
            order -= 1
        if order:
            reduced[root] = order
    return numerator, reduced


def val(r: RationalFunction, place: Place) -> int:
    """Order of vanishing of ``r`` at the place (0 or infinity)."""
    return r.val(place)


def as_rational(value: Any, field: ScalarField) -> RationalFunction:
    """Coerce scalars and Laurent polynomials into rational functions."""
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunction(value)
    return RationalFunction.constant(value, field)
