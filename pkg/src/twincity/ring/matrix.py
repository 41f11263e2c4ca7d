"""Loop matrices and their truncated-series images."""

import logging
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from itertools import permutations
from typing import Any, TypeVar

from twincity.errors import DeterminantNotOne, PoleOnCircle, RankMismatch
from twincity.models import Place
from twincity.ring.laurent import LaurentPoly
from twincity.ring.rational import RationalFunction, as_rational
from twincity.ring.scalars import (
    Scalar,
    ScalarField,
    format_scalar,
    join_fields,
    modulus_squared,
)
from twincity.ring.series import TruncatedSeries, expand

logger = logging.getLogger(__name__)

T = TypeVar("T")


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..n-1."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_determinant(rows: Sequence[Sequence[T]], zero: T) -> T:
    """Determinant by the Leibniz formula (the kernel only meets n <= 4)."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]  # type: ignore[operator]
        if permutation_sign(perm) < 0:
            total = total - term  # type: ignore[operator]
        else:
            total = total + term  # type: ignore[operator]
    return total


def cofactor_rows(rows: Sequence[Sequence[T]], zero: T) -> list[list[T]]:
    """Matrix of cofactors C[i][j] = (-1)^(i+j) det(minor(i, j))."""
    n = len(rows)
    if n < 2:
        raise RankMismatch("Cofactors need n >= 2")
    result: list[list[T]] = []
    for i in range(n):
        line: list[T] = []
        for j in range(n):
            minor = [[rows[a][b] for b in range(n) if b != j] for a in range(n) if a != i]
            value = leibniz_determinant(minor, zero)
            line.append(-value if (i + j) % 2 else value)  # type: ignore[operator]
        result.append(line)
    return result


class LoopMatrix:
    """n x n matrix of rational functions with determinant 1.

    Entries are :class:`RationalFunction` values; over a finite field all of
    them are Laurent polynomials. Construction validates the determinant and
    rejects poles on the unit circle unless ``validate=False``.
    """

    __slots__ = ("n", "field", "rows", "_hash")

    def __init__(
        self,
        rows: Sequence[Sequence[Any]],
        field: ScalarField,
        *,
        validate: bool = True,
    ) -> None:
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise RankMismatch(f"Expected a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")
        self.n = n
        self.field = field
        self.rows: tuple[tuple[RationalFunction, ...], ...] = tuple(
            tuple(as_rational(_coerce_entry(value, field), field) for value in row) for row in rows
        )
        self._hash: int | None = None
        if validate:
            self.validate()

    # -- validation ---------------------------------------------------

    def validate(self) -> None:
        """Check poles off the unit circle and determinant 1."""
        for i, row in enumerate(self.rows, start=1):
            for j, entry in enumerate(row, start=1):
                for root, _ in entry.poles:
                    if modulus_squared(root) == 1:
                        raise PoleOnCircle(
                            f"Entry ({i},{j}) has a pole at {format_scalar(self.field, root)} on the unit circle",
                            row=i,
                            column=j,
                        )
        determinant = self.det()
        if determinant != RationalFunction.one(self.field):
            raise DeterminantNotOne(f"Determinant is {determinant}, expected 1")

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int, field: ScalarField) -> "LoopMatrix":
        return cls(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], field, validate=False
        )

    @classmethod
    def elementary(cls, n: int, i: int, j: int, value: Any, field: ScalarField) -> "LoopMatrix":
        """Identity plus ``value`` at the 1-based position (i, j), i != j."""
        if i == j:
            raise ValueError("Elementary matrices need i != j")
        rows: list[list[Any]] = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        rows[i - 1][j - 1] = value
        return cls(rows, field)

    @classmethod
    def diagonal(cls, values: Sequence[Any], field: ScalarField, *, validate: bool = True) -> "LoopMatrix":
        n = len(values)
        rows: list[list[Any]] = [[0] * n for _ in range(n)]
        for k, value in enumerate(values):
            rows[k][k] = value
        return cls(rows, field, validate=validate)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], field: ScalarField, *, validate: bool = True) -> "LoopMatrix":
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)], field, validate=validate)

    # -- queries ------------------------------------------------------

    def entry(self, i: int, j: int) -> RationalFunction:
        """Entry at the 1-based position (i, j)."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[RationalFunction, ...]:
        """1-based column."""
        return tuple(row[j - 1] for row in self.rows)

    def entries(self) -> Iterable[RationalFunction]:
        for row in self.rows:
            yield from row

    def poles(self) -> set[Scalar]:
        return {root for entry in self.entries() for root, _ in entry.poles}

    @property
    def is_laurent(self) -> bool:
        return all(entry.is_laurent for entry in self.entries())

    def det(self) -> RationalFunction:
        return leibniz_determinant(self.rows, RationalFunction.zero(self.field))

    def is_identity(self) -> bool:
        return self == LoopMatrix.identity(self.n, self.field)

    # -- algebra ------------------------------------------------------

    def _check(self, other: "LoopMatrix") -> None:
        if other.n != self.n:
            raise RankMismatch(f"Cannot combine {self.n}x{self.n} with {other.n}x{other.n}")

    def __matmul__(self, other: "LoopMatrix") -> "LoopMatrix":
        if not isinstance(other, LoopMatrix):
            return NotImplemented
        self._check(other)
        zero = RationalFunction.zero(self.field)
        rows = []
        for i in range(self.n):
            line = []
            for j in range(self.n):
                total = zero
                for k in range(self.n):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a and b:
                        total = total + a * b
                line.append(total)
            rows.append(line)
        return LoopMatrix(rows, join_fields(self.field, other.field), validate=False)

    def map(self, fn: Callable[[RationalFunction], RationalFunction]) -> "LoopMatrix":
        return LoopMatrix([[fn(e) for e in row] for row in self.rows], self.field, validate=False)

    def transpose(self) -> "LoopMatrix":
        return LoopMatrix(
            [[self.rows[j][i] for j in range(self.n)] for i in range(self.n)], self.field, validate=False
        )

    def cofactors(self) -> "LoopMatrix":
        return LoopMatrix(
            cofactor_rows(self.rows, RationalFunction.zero(self.field)), self.field, validate=False
        )

    def inverse(self) -> "LoopMatrix":
        """Exact inverse; the determinant must be a nonzero constant."""
        determinant = self.det()
        numerator = determinant.numerator
        if determinant.poles or not numerator.is_constant() or numerator.is_zero():
            raise DeterminantNotOne(f"Determinant {determinant} is not a unit constant")
        inverse_det = self.field.inverse(numerator.coefficient(0))
        adjugate = self.cofactors().transpose()
        return adjugate.map(lambda e: e.scale(inverse_det))

    def substitute_inverse(self) -> "LoopMatrix":
        """g(1/t)."""
        return self.map(lambda e: e.substitute_inverse())

    def flip(self) -> "LoopMatrix":
        """Transpose-inverse of g(1/t), i.e. the cofactor matrix of g(1/t)."""
        return self.substitute_inverse().cofactors()

    def with_field(self, field: ScalarField) -> "LoopMatrix":
        return LoopMatrix(self.rows, field, validate=False)

    def expand(self, place: Place, n_terms: int) -> "SeriesMatrix":
        return SeriesMatrix(
            [[expand(e, place, n_terms) for e in row] for row in self.rows], self.field, place
        )

    # -- protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"LoopMatrix[{self.field.tag}]([{body}])"


def _coerce_entry(value: Any, field: ScalarField) -> Any:
    if isinstance(value, RationalFunction | LaurentPoly):
        return value
    if isinstance(value, Fraction | int | str):
        return RationalFunction.constant(field.convert(value), field)
    return RationalFunction.constant(value, field)


class SeriesMatrix:
    """Matrix of truncated series at one place."""

    __slots__ = ("n", "field", "place", "rows")

    def __init__(
        self, rows: Sequence[Sequence[TruncatedSeries]], field: ScalarField, place: Place
    ) -> None:
        self.n = len(rows)
        self.field = field
        self.place = place
        self.rows: tuple[tuple[TruncatedSeries, ...], ...] = tuple(tuple(row) for row in rows)

    def entry(self, i: int, j: int) -> TruncatedSeries:
        return self.rows[i - 1][j - 1]

    @property
    def precision(self) -> int | None:
        """Smallest absolute precision among the entries (None when all are exact)."""
        known = [e.precision for row in self.rows for e in row if e.precision is not None]
        return min(known) if known else None

    def _zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.field, self.place)

    def __matmul__(self, other: "SeriesMatrix | LoopMatrix") -> "SeriesMatrix":
        if isinstance(other, LoopMatrix):
            other = _exact_series(other, self.place)
        rows = []
        for i in range(self.n):
            line = []
            for j in range(self.n):
                total = self._zero()
                for k in range(self.n):
                    total = total + self.rows[i][k] * other.rows[k][j]
                line.append(total)
            rows.append(line)
        return SeriesMatrix(rows, self.field, self.place)

    def __rmatmul__(self, other: LoopMatrix) -> "SeriesMatrix":
        return _exact_series(other, self.place) @ self

    def det(self) -> TruncatedSeries:
        return leibniz_determinant(self.rows, self._zero())

    def inverse(self) -> "SeriesMatrix":
        """Inverse through the adjugate and the inverse of the determinant series."""
        inverse_det = self.det().inverse()
        cofactors = cofactor_rows(self.rows, self._zero())
        return SeriesMatrix(
            [[cofactors[j][i] * inverse_det for j in range(self.n)] for i in range(self.n)],
            self.field,
            self.place,
        )

    def agrees_with(self, exact: LoopMatrix) -> bool:
        """Coefficientwise agreement with an exact matrix on every known coefficient."""
        for i in range(self.n):
            for j in range(self.n):
                approx = self.rows[i][j]
                target = exact.rows[i][j]
                if target.is_zero():
                    reference = TruncatedSeries.zero(self.field, self.place)
                elif target.is_laurent:
                    reference = TruncatedSeries.exact(target.numerator, self.place)
                else:
                    bound = approx.precision if approx.precision is not None else approx.base + 1
                    low = target.val(self.place)
                    reference = expand(target, self.place, max(bound - low, 1))
                if not approx.agrees_with(reference):
                    return False
        return True

    def __repr__(self) -> str:
        return f"SeriesMatrix[{self.place.value}]({[list(map(repr, row)) for row in self.rows]})"


def _exact_series(matrix: LoopMatrix, place: Place) -> SeriesMatrix:
    if not matrix.is_laurent:
        raise ValueError("Only Laurent matrices have exact series images")
    return SeriesMatrix(
        [[TruncatedSeries.exact(e.numerator, place) for e in row] for row in matrix.rows],
        matrix.field,
        place,
    )


def monomial_matrix(
    columns: Sequence[tuple[int, int, Scalar]], field: ScalarField
) -> LoopMatrix:
    """Matrix with column j equal to c * t^k * e_row for (row, k, c) = columns[j] (1-based rows)."""
    n = len(columns)
    rows: list[list[Any]] = [[0] * n for _ in range(n)]
    for j, (row, exponent, coefficient) in enumerate(columns):
        rows[row - 1][j] = RationalFunction.monomial(exponent, field, coefficient)
    return LoopMatrix(rows, field, validate=False)
