"""Twin apartments and the BN-flip."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from twincity.bruhat.decompose import birkhoff
from twincity.building.distance import codelta, delta, relative_matrix
from twincity.building.models import Chamber
from twincity.errors import NotOpposite, SignMismatch
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.weyl.affine import elements_up_to_length
from twincity.weyl.models import AffinePermutation
from twincity.weyl.monomial import weyl_to_monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwinApartment:
    """Twin apartment through an opposite pair (X+, Y-).

    ``frame`` is a matrix g with X = g B+ and Y = g B-; the chambers of the
    apartment are g M_w B+ and g M_w B- for w in the affine Weyl group.
    """

    positive: Chamber
    negative: Chamber
    frame: LoopMatrix

    def chamber(self, w: AffinePermutation, sign: Sign) -> Chamber:
        """The chamber of the given sign at position w."""
        return Chamber(sign, self.frame @ weyl_to_monomial(w, self.frame.field))

    def contains(self, d: Chamber) -> bool:
        """Whether delta from the base chamber of d's sign equals the codistance from the other one."""
        base, other = (
            (self.positive, self.negative) if d.sign is Sign.PLUS else (self.negative, self.positive)
        )
        distance = delta(base, d)
        if distance.label is None:
            return False
        return distance.label == codelta(other, d)

    def enumerate(self, max_length: int, sign: Sign) -> Iterator[tuple[AffinePermutation, Chamber]]:
        """Chambers of one half with position of length <= max_length, one per Weyl element."""
        for w in sorted(elements_up_to_length(self.frame.n, max_length), key=_weyl_order):
            yield w, self.chamber(w, sign)


def _weyl_order(w: AffinePermutation) -> tuple[int, tuple[int, ...]]:
    return w.length, w.window


def twin_apartment(x: Chamber, y: Chamber) -> TwinApartment:
    """The twin apartment spanned by an opposite pair.

    Raises:
        SignMismatch: ``x`` is not positive or ``y`` is not negative
        NotOpposite: The codistance is not the identity
    """
    if x.sign is not Sign.PLUS or y.sign is not Sign.MINUS:
        raise SignMismatch("twin_apartment expects a positive and a negative chamber")
    result = birkhoff(relative_matrix(y, x))
    if not result.label.is_identity():
        raise NotOpposite(f"Codistance is {result.label.inverse()}, not the identity")
    frame = x.representative @ result.right_witness
    logger.debug("Twin apartment frame computed from the Birkhoff witnesses")
    return TwinApartment(x, y, frame)


def bn_flip(chamber: Chamber) -> Chamber:
    """Image under g(t) -> transpose-inverse of g(1/t); flips the sign."""
    return Chamber(chamber.sign.opposite, chamber.representative.flip())
