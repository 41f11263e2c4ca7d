"""Truncated power series at 0 or at infinity.

A series is stored in the local parameter ``u`` of its place (``u = t`` at 0,
``u = 1/t`` at infinity): coefficient ``k`` multiplies ``u^(base + k)``.
Terms with ``u``-exponent at or above ``precision`` are unknown, unless the
series is exact, in which case all omitted coefficients vanish.
"""

from collections.abc import Iterator, Sequence
from typing import Any

from twincity.errors import InsufficientPrecision, ZeroInput
from twincity.models import Place
from twincity.ring.laurent import LaurentPoly
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import Scalar, ScalarField


def _min_precision(*values: int | None) -> int | None:
    known = [v for v in values if v is not None]
    return min(known) if known else None


class TruncatedSeries:
    """Immutable truncated expansion of a function at one place."""

    __slots__ = ("field", "place", "base", "coefficients", "precision")

    def __init__(
        self,
        field: ScalarField,
        place: Place,
        base: int,
        coefficients: Sequence[Scalar],
        precision: int | None = None,
    ) -> None:
        """Create a series.

        Args:
            field: Scalar field of the coefficients
            place: Place of the expansion
            base: u-exponent of the first stored coefficient
            coefficients: Stored coefficients
            precision: Absolute u-precision, or None for an exact series
        """
        coefficients = list(coefficients)
        if precision is not None:
            coefficients = coefficients[: max(precision - base, 0)]
        while coefficients and not coefficients[0]:
            coefficients.pop(0)
            base += 1
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        if not coefficients:
            base = precision if precision is not None else 0
        self.field = field
        self.place = place
        self.base = base
        self.coefficients: tuple[Scalar, ...] = tuple(coefficients)
        self.precision = precision

    # -- constructors -------------------------------------------------

    @classmethod
    def exact(cls, poly: LaurentPoly, place: Place) -> "TruncatedSeries":
        """Exact series of a Laurent polynomial."""
        if poly.is_zero():
            return cls(poly.field, place, 0, [], None)
        if place is Place.INFINITY:
            poly = poly.substitute_inverse()
        low, high = poly.valuation(), poly.degree()
        return cls(poly.field, place, low, [poly.coefficient(e) for e in range(low, high + 1)], None)

    @classmethod
    def zero(cls, field: ScalarField, place: Place, precision: int | None = None) -> "TruncatedSeries":
        return cls(field, place, 0, [], precision)

    # -- queries ------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def is_known_zero(self) -> bool:
        return self.is_exact and not self.coefficients

    def leading(self) -> tuple[int, Scalar] | None:
        """(u-exponent, coefficient) of the first nonzero term, None if unknown or zero."""
        if not self.coefficients:
            return None
        return self.base, self.coefficients[0]

    def valuation_bound(self) -> int:
        """Lower bound for the u-valuation (exact when a term is known)."""
        return self.base

    def t_exponent(self, u_exponent: int) -> int:
        return u_exponent if self.place is Place.ZERO else -u_exponent

    def coefficient(self, u_exponent: int) -> Scalar:
        if self.precision is not None and u_exponent >= self.precision:
            raise InsufficientPrecision(f"Coefficient u^{u_exponent} beyond precision {self.precision}")
        index = u_exponent - self.base
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return self.field.zero

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        """Known nonzero terms as (t-exponent, coefficient)."""
        for index, coefficient in enumerate(self.coefficients):
            if coefficient:
                yield self.t_exponent(self.base + index), coefficient

    def to_laurent(self) -> LaurentPoly:
        """Known part as a Laurent polynomial in t."""
        return LaurentPoly(dict(self.terms()), self.field)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> None:
        if other.place is not self.place:
            raise ValueError("Series at different places")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        precision = _min_precision(self.precision, other.precision)
        bases = [s.base for s in (self, other) if s.coefficients]
        base = min(bases) if bases else 0
        top = max((s.base + len(s.coefficients) for s in (self, other)), default=base)
        if precision is not None:
            top = min(top, precision)
        coefficients = []
        for exponent in range(base, top):
            coefficients.append(self._stored(exponent) + other._stored(exponent))
        return TruncatedSeries(self.field, self.place, base, coefficients, precision)

    def _stored(self, exponent: int) -> Scalar:
        index = exponent - self.base
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return self.field.zero

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.field, self.place, self.base, [-c for c in self.coefficients], self.precision
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        if self.is_known_zero() or other.is_known_zero():
            return TruncatedSeries.zero(self.field, self.place)
        precision = _min_precision(
            None if self.precision is None else self.precision + other.base,
            None if other.precision is None else other.precision + self.base,
        )
        base = self.base + other.base
        length = len(self.coefficients) + len(other.coefficients) - 1
        if precision is not None:
            length = min(length, precision - base)
        coefficients = [self.field.zero] * max(length, 0)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if i + j >= len(coefficients):
                    break
                coefficients[i + j] = coefficients[i + j] + a * b
        return TruncatedSeries(self.field, self.place, base, coefficients, precision)

    def scale(self, factor: Any) -> "TruncatedSeries":
        value = self.field.convert(factor)
        if not value:
            return TruncatedSeries.zero(self.field, self.place)
        return TruncatedSeries(
            self.field, self.place, self.base, [c * value for c in self.coefficients], self.precision
        )

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        step = k if self.place is Place.ZERO else -k
        precision = None if self.precision is None else self.precision + step
        return TruncatedSeries(self.field, self.place, self.base + step, self.coefficients, precision)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the leading term must be known."""
        lead = self.leading()
        if lead is None:
            if self.is_known_zero():
                raise ZeroInput("Inverse of the zero series")
            raise InsufficientPrecision("Inverse of a series with unknown leading term")
        valuation, a0 = lead
        if self.is_exact and len(self.coefficients) == 1:
            return TruncatedSeries(
                self.field, self.place, -valuation, [self.field.inverse(a0)], None
            )
        if self.precision is None:
            raise InsufficientPrecision("Exact inverse of a non-monomial series; truncate first")
        relative = self.precision - valuation
        inverse_a0 = self.field.inverse(a0)
        result: list[Scalar] = [inverse_a0]
        for k in range(1, relative):
            total = self.field.zero
            for i in range(1, k + 1):
                total = total + self._stored(valuation + i) * result[k - i]
            result.append(-total * inverse_a0)
        return TruncatedSeries(self.field, self.place, -valuation, result, -valuation + relative)

    def truncate(self, precision: int) -> "TruncatedSeries":
        bound = precision if self.precision is None else min(precision, self.precision)
        return TruncatedSeries(self.field, self.place, self.base, self.coefficients, bound)

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality of all coefficients both series know."""
        self._check(other)
        bound = _min_precision(self.precision, other.precision)
        low = min(self.base, other.base)
        high = max(self.base + len(self.coefficients), other.base + len(other.coefficients))
        if bound is not None:
            high = min(high, bound)
        return all(self._stored(e) == other._stored(e) for e in range(low, high))

    def __repr__(self) -> str:
        variable = "t" if self.place is Place.ZERO else "t^-1"
        body = " + ".join(f"{c}*{variable}^{self.base + i}" for i, c in enumerate(self.coefficients) if c)
        tail = "" if self.precision is None else f" + O({variable}^{self.precision})"
        return f"TruncatedSeries({body or '0'}{tail})"


def _inverse_polynomial_series(denominator: LaurentPoly, count: int) -> list[Scalar]:
    """First ``count`` coefficients of 1/q(u) for a polynomial q with q(0) != 0."""
    field = denominator.field
    q0 = denominator.coefficient(0)
    inverse_q0 = field.inverse(q0)
    result: list[Scalar] = []
    for k in range(count):
        total = field.one if k == 0 else field.zero
        for i in range(1, k + 1):
            total = total - denominator.coefficient(i) * result[k - i]
        result.append(total * inverse_q0)
    return result


def expand(r: RationalFunction, place: Place, n_terms: int) -> TruncatedSeries:
    """Expansion of ``r`` at 0 or infinity with ``n_terms`` coefficients.

    Laurent polynomials expand exactly; other inputs are truncated to
    ``n_terms`` coefficients starting at the leading term.
    """
    if n_terms < 1:
        raise ValueError(f"Precision must be positive, got {n_terms}")
    if r.is_laurent:
        return TruncatedSeries.exact(r.numerator, place)
    local = r if place is Place.ZERO else r.substitute_inverse()
    numerator = local.numerator
    low = numerator.valuation()
    # numerator = u^low * p(u) with p(0) != 0; denominator is a polynomial with q(0) != 0
    polynomial = numerator.shift(-low)
    inverse = _inverse_polynomial_series(local.denominator(), n_terms)
    coefficients = []
    for k in range(n_terms):
        total = local.field.zero
        for i in range(k + 1):
            total = total + polynomial.coefficient(i) * inverse[k - i]
        coefficients.append(total)
    return TruncatedSeries(local.field, place, low, coefficients, low + n_terms)
