"""Exact scalar fields: prime fields, the rationals and the Gaussian rationals.

Scalars are plain sympy domain elements; a :class:`ScalarField` knows which
domain they live in. The rational model always computes inside ``QQ_I`` so
that pole locations may be Gaussian, and merely remembers whether the user
asked for rational or Gaussian data.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

from sympy import GF, QQ, QQ_I, isprime

from twincity.errors import FieldMismatch, ParseError
from twincity.ring.models import FieldKind

Scalar = Any

MAX_PRIME = 2**16


@dataclass(frozen=True)
class ScalarField:
    """A ground field tag with its sympy domain."""

    kind: FieldKind
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.FP:
            if not (2 <= self.p <= MAX_PRIME and isprime(self.p)):
                raise FieldMismatch(f"F_p needs a prime p <= {MAX_PRIME}, got {self.p}")
        elif self.p:
            raise FieldMismatch(f"Characteristic given for field {self.kind.value}")

    @cached_property
    def domain(self) -> Any:
        if self.kind is FieldKind.FP:
            return GF(self.p, symmetric=False)
        return QQ_I

    @property
    def is_finite(self) -> bool:
        return self.kind is FieldKind.FP

    @property
    def tag(self) -> str:
        if self.kind is FieldKind.FP:
            return f"F{self.p}"
        return self.kind.value

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def convert(self, value: Any) -> Scalar:
        """Coerce ints, Fractions, strings or domain elements into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.domain.convert(QQ(value.numerator, value.denominator))
        return self.domain.convert(value)

    def parse(self, text: str) -> Scalar:
        """Parse "a" or "a/b"; Gaussian values use :meth:`gaussian`."""
        try:
            fraction = Fraction(text.strip())
        except ValueError:
            raise ParseError(f"Not a scalar of {self.tag}: {text!r}") from None
        if self.is_finite:
            numerator = self.domain.convert(fraction.numerator)
            denominator = self.domain.convert(fraction.denominator)
            if not denominator:
                raise ParseError(f"Denominator vanishes in {self.tag}: {text!r}")
            return numerator / denominator
        return self.domain.convert(QQ(fraction.numerator, fraction.denominator))

    def gaussian(self, re: Fraction | int, im: Fraction | int) -> Scalar:
        if self.is_finite:
            raise FieldMismatch(f"Gaussian scalars do not live in {self.tag}")
        re_q, im_q = Fraction(re), Fraction(im)
        return QQ_I(QQ(re_q.numerator, re_q.denominator), QQ(im_q.numerator, im_q.denominator))

    def inverse(self, value: Scalar) -> Scalar:
        return self.one / value

    def power(self, value: Scalar, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse(value) ** (-exponent)
        return value**exponent

    def elements(self) -> list[Scalar]:
        """All elements of a finite field, in increasing integer order."""
        if not self.is_finite:
            raise FieldMismatch(f"{self.tag} is infinite")
        return [self.domain.convert(k) for k in range(self.p)]

    def to_int(self, value: Scalar) -> int:
        return int(value) % self.p


FP_CACHE: dict[int, ScalarField] = {}
RATIONAL = ScalarField(FieldKind.RATIONAL)
GAUSSIAN = ScalarField(FieldKind.GAUSSIAN)


def prime_field(p: int) -> ScalarField:
    """Return the (cached) prime field F_p."""
    if p not in FP_CACHE:
        FP_CACHE[p] = ScalarField(FieldKind.FP, p)
    return FP_CACHE[p]


def field_from_tag(tag: str) -> ScalarField:
    """Parse a field tag such as 'F2', 'F3', 'Q' or 'QI'."""
    text = tag.strip()
    if text in ("Q", "QQ", "Rational"):
        return RATIONAL
    if text in ("QI", "Q(i)", "QQ_I", "Gaussian", "GaussianRational"):
        return GAUSSIAN
    if text.upper().startswith("F") and text[1:].isdigit():
        return prime_field(int(text[1:]))
    raise FieldMismatch(f"Unknown field tag: {tag!r}")


def join_fields(a: ScalarField, b: ScalarField) -> ScalarField:
    """Smallest tag covering both operands; mixing F_p with Q is rejected."""
    if a == b:
        return a
    if a.is_finite or b.is_finite:
        raise FieldMismatch(f"Cannot mix {a.tag} and {b.tag}")
    return GAUSSIAN


def to_fraction(value: Any) -> Fraction:
    """Convert a QQ element to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def real_imag(value: Scalar) -> tuple[Fraction, Fraction]:
    """Real and imaginary parts of a Gaussian rational."""
    return to_fraction(value.x), to_fraction(value.y)


def modulus_squared(value: Scalar) -> Fraction:
    """|c|^2 as an exact fraction."""
    re, im = real_imag(value)
    return re * re + im * im


def sort_key(value: Scalar) -> tuple[Fraction, Fraction]:
    return real_imag(value)


def format_scalar(field: ScalarField, value: Scalar) -> str:
    """Human readable rendering used in logs and DOT labels."""
    if field.is_finite:
        return str(field.to_int(value))
    re, im = real_imag(value)
    if not im:
        return str(re)
    if not re:
        return f"{im}*I"
    return f"{re}{'+' if im > 0 else '-'}{abs(im)}*I"
