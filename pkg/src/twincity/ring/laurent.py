"""Laurent polynomials over an exact scalar field.

A Laurent polynomial is a finite map from integer exponents to nonzero
scalars; the empty map is zero.
"""

from collections.abc import Iterator, Mapping
from types import MappingProxyType
from typing import Any

from twincity.errors import ZeroInput
from twincity.ring.scalars import Scalar, ScalarField, format_scalar, join_fields


class LaurentPoly:
    """Immutable Laurent polynomial in t."""

    __slots__ = ("_terms", "field", "_hash")

    def __init__(self, terms: Mapping[int, Any], field: ScalarField) -> None:
        clean: dict[int, Scalar] = {}
        for exponent, coefficient in terms.items():
            value = field.convert(coefficient)
            if value:
                clean[int(exponent)] = value
        self._terms = MappingProxyType(dict(sorted(clean.items())))
        self.field = field
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, Scalar], field: ScalarField) -> "LaurentPoly":
        """Build from coefficients already in the field, dropping zeros."""
        poly = cls.__new__(cls)
        poly._terms = MappingProxyType({e: c for e, c in sorted(terms.items()) if c})
        poly.field = field
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field: ScalarField) -> "LaurentPoly":
        return cls({}, field)

    @classmethod
    def constant(cls, value: Any, field: ScalarField) -> "LaurentPoly":
        return cls({0: value}, field)

    @classmethod
    def monomial(cls, exponent: int, field: ScalarField, coefficient: Any = 1) -> "LaurentPoly":
        return cls({exponent: coefficient}, field)

    @classmethod
    def linear_power(cls, root: Scalar, order: int, field: ScalarField) -> "LaurentPoly":
        """(t - root)^order for order >= 0."""
        result = cls.constant(1, field)
        factor = cls({1: 1, 0: -root}, field)
        for _ in range(order):
            result = result * factor
        return result

    # -- queries ------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, Scalar]:
        return self._terms

    def items(self) -> Iterator[tuple[int, Scalar]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exponent: int) -> Scalar:
        return self._terms.get(exponent, self.field.zero)

    def valuation(self) -> int:
        """Minimal exponent (order of vanishing at 0)."""
        if not self._terms:
            raise ZeroInput("Valuation of the zero polynomial")
        return next(iter(self._terms))

    def degree(self) -> int:
        """Maximal exponent."""
        if not self._terms:
            raise ZeroInput("Degree of the zero polynomial")
        return next(reversed(self._terms))

    def lowest_term(self) -> tuple[int, Scalar]:
        exponent = self.valuation()
        return exponent, self._terms[exponent]

    def highest_term(self) -> tuple[int, Scalar]:
        exponent = self.degree()
        return exponent, self._terms[exponent]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def evaluate(self, point: Scalar) -> Scalar:
        """Value at a nonzero scalar."""
        total = self.field.zero
        for exponent, coefficient in self._terms.items():
            total = total + coefficient * self.field.power(point, exponent)
        return total

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: Any) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other, self.field)

    def __add__(self, other: Any) -> "LaurentPoly":
        other = self._coerce(other)
        field = join_fields(self.field, other.field)
        merged = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            merged[exponent] = merged.get(exponent, field.zero) + coefficient
        return LaurentPoly._raw(merged, field)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.field)

    def __sub__(self, other: Any) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        field = join_fields(self.field, other.field)
        product: dict[int, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, field.zero) + c1 * c2
        return LaurentPoly._raw(product, field)

    __rmul__ = __mul__

    def scale(self, factor: Any) -> "LaurentPoly":
        value = self.field.convert(factor)
        return LaurentPoly._raw({e: c * value for e, c in self._terms.items()}, self.field)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self.field)

    def substitute_inverse(self) -> "LaurentPoly":
        """p(1/t)."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()}, self.field)

    def divide_linear(self, root: Scalar) -> "LaurentPoly":
        """Exact quotient by (t - root); the caller guarantees p(root) = 0."""
        if not self._terms:
            return self
        low = self.valuation()
        coefficients = [self.coefficient(e) for e in range(low, self.degree() + 1)]
        # synthetic division of the polynomial part, highest degree first
        quotient: list[Scalar] = []
        carry = self.field.zero
        for coefficient in reversed(coefficients[1:]):
            carry = coefficient + carry * root
            quotient.append(carry)
        quotient.reverse()
        return LaurentPoly._raw({low + k: c for k, c in enumerate(quotient)}, self.field)

    def with_field(self, field: ScalarField) -> "LaurentPoly":
        return LaurentPoly(dict(self._terms), field)

    # -- protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.field.domain == other.field.domain and dict(self._terms) == dict(
                other._terms
            )
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self.field)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in self._terms.items():
            text = format_scalar(self.field, coefficient)
            if exponent == 0:
                parts.append(text)
            elif exponent == 1:
                parts.append(f"{text}*t")
            else:
                parts.append(f"{text}*t^{exponent}")
        return " + ".join(parts)
