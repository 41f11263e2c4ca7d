"""Exact rank over the rational function field.

Rows of rational functions are scaled by their denominators and a power of
t into polynomial rows over F[t]; the rank is then read off a fraction-free
row echelon form computed by sympy.
"""

from collections.abc import Sequence
from typing import Any

import sympy
from sympy.polys.matrices import DomainMatrix

from twincity.ring.laurent import LaurentPoly
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import ScalarField

T_SYMBOL = sympy.Symbol("t")


def polynomial_ring(field: ScalarField) -> Any:
    """The sympy domain F[t]."""
    return field.domain[T_SYMBOL]


def _polynomial_row(row: Sequence[RationalFunction], field: ScalarField) -> list[LaurentPoly]:
    denominator = LaurentPoly.constant(1, field)
    for entry in row:
        denominator = denominator * entry.denominator()
    scale = RationalFunction.from_laurent(denominator)
    cleared = [(entry * scale).numerator for entry in row]
    nonzero = [p.valuation() for p in cleared if not p.is_zero()]
    low = min(nonzero) if nonzero else 0
    return [p.shift(-low) for p in cleared]


def rank(rows: Sequence[Sequence[RationalFunction]], field: ScalarField) -> int:
    """Rank of the span of ``rows`` over F(t)."""
    if not rows:
        return 0
    ring = polynomial_ring(field)
    width = len(rows[0])
    elements = [
        [ring.ring.from_dict({(e,): c for e, c in p.items()}) for p in _polynomial_row(row, field)]
        for row in rows
    ]
    _, _, pivots = DomainMatrix(elements, (len(rows), width), ring).rref_den(method="FF")
    return len(pivots)
