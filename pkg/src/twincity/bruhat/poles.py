"""Moving poles of a rational matrix into Iwahori factors on either side.

A matrix g with poles in C* factors as ``left^-1 @ core @ right^-1`` where
``core`` is Laurent, ``right`` lies in B+ (poles outside the unit disk,
identity at 0) and ``left`` lies in B- (poles inside the disk, identity at
infinity). The Birkhoff label of g is then the label of ``core``.
"""

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from twincity.models import Place
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import Scalar, ScalarField, modulus_squared, sort_key

logger = logging.getLogger(__name__)

Column = list[RationalFunction]


@dataclass(frozen=True)
class PoleSplit:
    """``left @ g @ right == core`` with ``core`` Laurent."""

    left: LoopMatrix
    core: LoopMatrix
    right: LoopMatrix

    @property
    def is_trivial(self) -> bool:
        return self.left.is_identity() and self.right.is_identity()


def uniformizer_power(
    root: Scalar, exponent: int, field: ScalarField, *, at_infinity: bool
) -> RationalFunction:
    """(t - root)^k, or ((t - root)/t)^k when the factor must stay regular at infinity."""
    if exponent >= 0:
        power = RationalFunction(LaurentPoly.linear_power(root, exponent, field))
    else:
        power = RationalFunction(LaurentPoly.constant(1, field), [(root, -exponent)], field)
    return power.shift(-exponent) if at_infinity else power


def _column_head(
    column: Column, root: Scalar, field: ScalarField, *, at_infinity: bool
) -> tuple[int, list[Scalar]]:
    terms = [entry.local_term(root) if entry else None for entry in column]
    order = min(term[0] for term in terms if term is not None)
    vector = [term[1] if term is not None and term[0] == order else field.zero for term in terms]
    if at_infinity:
        scale = field.power(root, order)
        vector = [value * scale for value in vector]
    return order, vector


def _dependency(heads: list[list[Scalar]], field: ScalarField) -> list[Scalar] | None:
    """Coefficients of a linear relation among the head vectors, if any."""
    n = len(heads)
    rows = [[heads[j][i] for j in range(n)] for i in range(n)]
    basis = DomainMatrix(rows, (n, n), field.domain).nullspace()
    if basis.shape[0] == 0:
        return None
    return [basis[0, j].element for j in range(n)]


def _combine(target: Column, source: Column, factor: RationalFunction) -> Column:
    return [a + factor * b for a, b in zip(target, source)]


def clear_pole(m: LoopMatrix, root: Scalar, *, at_infinity: bool) -> LoopMatrix:
    """Column operations h with det 1 such that ``m @ h`` is regular at ``root``.

    The entries of h have poles only at ``root``, and at 0 when ``at_infinity``
    keeps them regular at infinity.
    """
    field = m.field
    columns = [list(m.column(j)) for j in range(1, m.n + 1)]
    ops = [list(LoopMatrix.identity(m.n, field).column(j)) for j in range(1, m.n + 1)]
    while True:
        heads = [_column_head(col, root, field, at_infinity=at_infinity) for col in columns]
        relation = _dependency([vector for _, vector in heads], field)
        if relation is None:
            break
        support = [j for j, value in enumerate(relation) if value]
        k = min(support, key=lambda j: (heads[j][0], j))
        for j in support:
            if j == k:
                continue
            factor = uniformizer_power(
                root, heads[k][0] - heads[j][0], field, at_infinity=at_infinity
            ).scale(relation[j] / relation[k])
            columns[k] = _combine(columns[k], columns[j], factor)
            ops[k] = _combine(ops[k], ops[j], factor)
    for j, (order, _) in enumerate(heads):
        if order:
            factor = uniformizer_power(root, -order, field, at_infinity=at_infinity)
            ops[j] = [entry * factor for entry in ops[j]]
    return LoopMatrix.from_columns(ops, field, validate=False)


def _constant(rows: list[list[Scalar]], field: ScalarField) -> LoopMatrix:
    return LoopMatrix(rows, field, validate=False)


def _value_at(entry: RationalFunction, place: Place, field: ScalarField) -> Scalar:
    if not entry:
        return field.zero
    exponent, coefficient = entry.leading_term(place)
    return coefficient if exponent == 0 else field.zero


def split_poles(g: LoopMatrix) -> PoleSplit:
    """Move poles outside the unit disk to the right and nonzero poles inside it to the left."""
    field = g.field
    identity = LoopMatrix.identity(g.n, field)
    outside = sorted((c for c in g.poles() if modulus_squared(c) > 1), key=sort_key)
    inside = sorted((c for c in g.poles() if modulus_squared(c) < 1), key=sort_key)

    right = identity
    current = g
    for root in outside:
        h = clear_pole(current, root, at_infinity=False)
        current = current @ h
        right = right @ h
    if outside:
        at_zero = _constant([[_value_at(e, Place.ZERO, field) for e in row] for row in right.rows], field)
        right = right @ at_zero.inverse()
        current = g @ right

    left_t = identity
    current_t = current.transpose()
    for root in inside:
        k = clear_pole(current_t, root, at_infinity=True)
        current_t = current_t @ k
        left_t = left_t @ k
    left = left_t.transpose()
    if inside:
        at_infinity = _constant(
            [[_value_at(e, Place.INFINITY, field) for e in row] for row in left.rows], field
        )
        left = at_infinity.inverse() @ left
        current = left @ current
    if outside or inside:
        logger.debug(f"Moved {len(outside)} outer and {len(inside)} inner poles off a rank {g.n} matrix")
    return PoleSplit(left=left, core=current, right=right)
