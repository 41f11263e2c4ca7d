"""Column reduction over the Z-indexed basis.

The basis vector e_{i + n q} of the lattice picture is t^q e_i. A term
c t^m in row i of a column therefore sits at Z-row i + n m. Each column has an
extremal Z-row (lowest at 0, highest at infinity). Right column operations
from an Iwahori subgroup cancel extremal terms until the extremal rows of all
columns have pairwise distinct residues mod n; these rows are then the
window of the double-coset label.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from twincity.bruhat.models import Extremum, ReductionStrategy
from twincity.config import get_settings
from twincity.errors import DeterminantNotOne, InsufficientPrecision, NonTerminating
from twincity.models import Place, Sign
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix, SeriesMatrix
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import ScalarField
from twincity.ring.series import TruncatedSeries
from twincity.weyl.models import AffinePermutation

logger = logging.getLogger(__name__)

Entry = Any  # RationalFunction or TruncatedSeries


@dataclass(frozen=True)
class ColumnHead:
    """Extremal term of a column: its Z-row, matrix row and coefficient."""

    z_row: int
    row: int
    exponent: int
    coefficient: Any


@dataclass
class ReductionOutcome:
    window: tuple[int, ...]
    reduced_columns: list[list[Entry]]
    right_columns: list[list[LaurentPoly]]
    coefficients: list[Any]
    steps: int


def _leading(entry: Entry, place: Place) -> tuple[int, Any] | None:
    """(t-exponent, coefficient) of the first term at the place, None for zero."""
    if isinstance(entry, TruncatedSeries):
        lead = entry.leading()
        if lead is None:
            return None
        return entry.t_exponent(lead[0]), lead[1]
    if entry.is_zero():
        return None
    return entry.leading_term(place)


def _is_unknown(entry: Entry) -> bool:
    return isinstance(entry, TruncatedSeries) and not entry.coefficients and not entry.is_exact


class ColumnReducer:
    """Generic elimination for the three decomposition modes."""

    def __init__(self, strategy: ReductionStrategy, n: int, field: ScalarField) -> None:
        self.strategy = strategy
        self.n = n
        self.field = field
        self._sign = 1 if strategy.extremum is Extremum.MIN else -1

    def _key(self, z_row: int) -> int:
        return self._sign * z_row

    def head(self, column: Sequence[Entry]) -> ColumnHead:
        """Extremal term of a column.

        Raises:
            InsufficientPrecision: A truncated entry could still hide a more extreme term
        """
        best: ColumnHead | None = None
        unknown_bounds: list[int] = []
        for i, entry in enumerate(column, start=1):
            if _is_unknown(entry):
                u_bound = entry.precision
                t_bound = u_bound if entry.place is Place.ZERO else -u_bound
                unknown_bounds.append(self._key(i + self.n * t_bound))
                continue
            lead = _leading(entry, self.strategy.place)
            if lead is None:
                continue
            exponent, coefficient = lead
            z_row = i + self.n * exponent
            if best is None or self._key(z_row) < self._key(best.z_row):
                best = ColumnHead(z_row, i, exponent, coefficient)
        if best is None:
            if unknown_bounds:
                raise InsufficientPrecision("A column is entirely beyond the current precision")
            raise DeterminantNotOne("A column vanishes; the matrix is singular")
        if any(bound <= self._key(best.z_row) for bound in unknown_bounds):
            raise InsufficientPrecision(
                f"Column head at Z-row {best.z_row} is not separated from truncated entries"
            )
        return best

    def _iteration_cap(self, heads: Sequence[ColumnHead]) -> int:
        # every step moves one head strictly towards its final value, and the
        # final heads always sum to 1 + ... + n
        target = self.n * (self.n + 1) // 2
        span = abs(target - sum(h.z_row for h in heads)) + 1
        return get_settings().iteration_factor * self.n * self.n * span

    def _allowed(self, source: int, target: int, shift: int) -> bool:
        """Whether column_target += c t^shift column_source lies in the right Iwahori."""
        z_row = source + self.n * shift
        if self.strategy.right_sign is Sign.PLUS:
            return z_row > target
        return z_row < target

    def reduce(self, columns: list[list[Entry]]) -> ReductionOutcome:
        """Run the elimination in place on ``columns`` (0-based list of columns)."""
        n = self.n
        right: list[list[LaurentPoly]] = [
            [LaurentPoly.constant(1 if i == j else 0, self.field) for i in range(n)] for j in range(n)
        ]
        heads = [self.head(col) for col in columns]
        cap = self._iteration_cap(heads)
        steps = 0
        while True:
            collision = self._pick_collision(heads)
            if collision is None:
                break
            if steps >= cap:
                raise NonTerminating(f"Elimination exceeded {cap} steps")
            j, k = collision
            shift = heads[j].exponent - heads[k].exponent
            # Z-rows of j and k agree mod n; cancel whichever column the Iwahori allows
            if self._allowed(k + 1, j + 1, shift):
                target, source = j, k
            else:
                target, source, shift = k, j, -shift
            factor = -heads[target].coefficient / heads[source].coefficient
            columns[target] = [
                a + b.shift(shift).scale(factor) for a, b in zip(columns[target], columns[source], strict=True)
            ]
            right[target] = [
                a + b.shift(shift).scale(factor) for a, b in zip(right[target], right[source], strict=True)
            ]
            old = heads[target].z_row
            heads[target] = self.head(columns[target])
            steps += 1
            logger.debug(
                f"{self.strategy.mode.value}: column {target + 1} -= column {source + 1} * t^{shift}; "
                f"head {old} -> {heads[target].z_row}"
            )
        return ReductionOutcome(
            window=tuple(h.z_row for h in heads),
            reduced_columns=columns,
            right_columns=right,
            coefficients=[h.coefficient for h in heads],
            steps=steps,
        )

    def _pick_collision(self, heads: Sequence[ColumnHead]) -> tuple[int, int] | None:
        best: tuple[int, int, int] | None = None
        for j in range(self.n):
            for k in range(j + 1, self.n):
                if (heads[j].z_row - heads[k].z_row) % self.n:
                    continue
                key = min(self._key(heads[j].z_row), self._key(heads[k].z_row))
                if best is None or (key, j, k) < best:
                    best = (key, j, k)
        return None if best is None else (best[1], best[2])


def columns_of(matrix: LoopMatrix | SeriesMatrix) -> list[list[Entry]]:
    return [[matrix.rows[i][j] for i in range(matrix.n)] for j in range(matrix.n)]


def right_witness(outcome: ReductionOutcome, field: ScalarField) -> LoopMatrix:
    columns = [[RationalFunction(e) for e in col] for col in outcome.right_columns]
    return LoopMatrix.from_columns(columns, field, validate=False)


def label_of(outcome: ReductionOutcome) -> AffinePermutation:
    try:
        return AffinePermutation(len(outcome.window), outcome.window)
    except ValueError as exc:
        raise NonTerminating(f"Elimination ended on an invalid window {outcome.window}") from exc
