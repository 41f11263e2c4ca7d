"""Weyl distance, codistance and opposition of chambers."""

import logging

from twincity.bruhat.decompose import birkhoff, rational_bruhat
from twincity.building.models import Chamber, DistanceValue
from twincity.errors import RankMismatch, SignMismatch
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.regularity import regularity_class
from twincity.ring.scalars import ScalarField
from twincity.weyl.models import AffinePermutation

logger = logging.getLogger(__name__)


def standard_chamber(n: int, sign: Sign, field: ScalarField) -> Chamber:
    """The standard chamber B^sign."""
    return Chamber(sign, LoopMatrix.identity(n, field))


def translate(h: LoopMatrix, chamber: Chamber) -> Chamber:
    """Left translate h . C."""
    return Chamber(chamber.sign, h @ chamber.representative)


def relative_matrix(c: Chamber, d: Chamber) -> LoopMatrix:
    """g^-1 f for chambers g B and f B."""
    if c.n != d.n:
        raise RankMismatch(f"Chambers of ranks {c.n} and {d.n}")
    return c.representative.inverse() @ d.representative


def delta(c: Chamber, d: Chamber) -> DistanceValue:
    """Weyl distance between chambers of equal sign.

    Raises:
        SignMismatch: The chambers have different signs
    """
    if c.sign is not d.sign:
        raise SignMismatch(f"delta needs equal signs, got {c.sign.value} and {d.sign.value}")
    h = relative_matrix(c, d)
    if not regularity_class(h).admits(c.sign):
        return DistanceValue.infinite()
    return DistanceValue.finite(rational_bruhat(h, c.sign).label)


def codelta(x: Chamber, y: Chamber) -> AffinePermutation:
    """Codistance between chambers of opposite signs.

    For x positive and y negative this labels x^-1 y in B+ w B-; swapping the
    arguments inverts the label.

    Raises:
        SignMismatch: The chambers have the same sign
    """
    if x.sign is y.sign:
        raise SignMismatch(f"codelta needs opposite signs, got {x.sign.value} twice")
    if x.sign is Sign.MINUS:
        return birkhoff(relative_matrix(x, y)).label
    return birkhoff(relative_matrix(y, x)).label.inverse()


def is_opposite(x: Chamber, y: Chamber) -> bool:
    return codelta(x, y).is_identity()


def same_chamber(c: Chamber, d: Chamber) -> bool:
    """Chamber equality: same sign and trivial Weyl distance."""
    if c.sign is not d.sign or c.n != d.n:
        return False
    return delta(c, d).is_identity
