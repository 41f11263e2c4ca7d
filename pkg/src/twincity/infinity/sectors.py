"""Sectors of twin apartments and their flags at infinity."""

import logging
from collections.abc import Sequence
from itertools import permutations

from twincity.building.apartment import TwinApartment, bn_flip, twin_apartment
from twincity.errors import InputError, NotOpposite
from twincity.infinity.flags import relative_position, same_flag
from twincity.infinity.models import Flag, SphericalPosition
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix

logger = logging.getLogger(__name__)


def _direction(direction: SphericalPosition | Sequence[int], n: int) -> tuple[int, ...]:
    perm = direction.perm if isinstance(direction, SphericalPosition) else tuple(direction)
    if sorted(perm) != list(range(1, n + 1)):
        raise InputError(f"Direction {list(perm)} is not a permutation of 1..{n}")
    return perm


def sector_to_flag(g: LoopMatrix, direction: SphericalPosition | Sequence[int]) -> Flag:
    """Flag at infinity of the sector based at g in direction u.

    The flag is spanned by g e_{u(1)}, g e_{u(2)}, ... in order; it only
    depends on the sector germ, so it is unchanged when the base is moved by
    a translation monomial matrix.
    """
    perm = _direction(direction, g.n)
    return Flag(tuple(g.column(k) for k in perm), g.field)


def sector_directions(n: int) -> list[SphericalPosition]:
    """All chambers of the finite Coxeter complex, in lexicographic order."""
    return [SphericalPosition(p) for p in permutations(range(1, n + 1))]


def sector_ray(direction: SphericalPosition | Sequence[int]) -> tuple[int, ...]:
    """Exponents of a translation diag(t^m_1, ..., t^m_n) deep inside the positive sector of direction u.

    The exponents strictly decrease along u: m_{u(1)} > m_{u(2)} > ... .
    """
    raw = direction.perm if isinstance(direction, SphericalPosition) else tuple(direction)
    perm = _direction(raw, len(raw))
    n = len(perm)
    exponents = [0] * n
    for k, axis in enumerate(perm):
        exponents[axis - 1] = n - 1 - 2 * k
    return tuple(exponents)


def ray_direction(ray: Sequence[int], sign: Sign) -> SphericalPosition:
    """Direction of the sector of the given sign that contains the translation ray.

    The positive building orders axes by decreasing exponent; at infinity the
    valuation is reversed, so the negative building orders them by
    increasing exponent (the positive order composed with w0).
    """
    axes = sorted(range(1, len(ray) + 1), key=lambda i: (-ray[i - 1], i))
    if sign is Sign.MINUS:
        axes.reverse()
    return SphericalPosition(tuple(axes))


def negative_frame(apartment: TwinApartment) -> LoopMatrix:
    """Frame of the apartment computed from the negative side.

    The flip sends the negative half to a positive one; the twin apartment of
    the flipped pair is built there and its frame is flipped back. It agrees
    with ``apartment.frame`` up to the constant torus.

    Raises:
        NotOpposite: The chambers of the apartment are not opposite
    """
    flipped = twin_apartment(bn_flip(apartment.negative), bn_flip(apartment.positive))
    return flipped.frame.flip()


def boundary_frames(
    apartment: TwinApartment,
) -> tuple[dict[SphericalPosition, Flag], dict[SphericalPosition, Flag]]:
    """Sector flags of both halves of a twin apartment, keyed by positive direction.

    The positive sector of direction u runs along the ray of :func:`sector_ray`;
    it is matched with the negative sector along the opposite ray, whose
    direction and flag are read off the negative frame.
    """
    positive_frame = apartment.frame
    negative = negative_frame(apartment)
    positive_flags: dict[SphericalPosition, Flag] = {}
    negative_flags: dict[SphericalPosition, Flag] = {}
    for u in sector_directions(positive_frame.n):
        ray = sector_ray(u)
        opposite_ray = tuple(-m for m in ray)
        positive_flags[u] = sector_to_flag(positive_frame, ray_direction(ray, Sign.PLUS))
        negative_flags[u] = sector_to_flag(negative, ray_direction(opposite_ray, Sign.MINUS))
    return positive_flags, negative_flags


def boundary_pair_check(apartment: TwinApartment) -> bool:
    """Whether matching sectors identify the two boundary apartments.

    The identification must send each positive sector flag to the flag of
    the matched negative sector and preserve relative positions. Chambers
    that are not opposite span no twin apartment and fail the check.
    """
    try:
        positive, negative = boundary_frames(apartment)
    except NotOpposite as exc:
        logger.info(f"No twin apartment through the pair: {exc.detail}")
        return False
    directions = list(positive)
    for u in directions:
        if not same_flag(positive[u], negative[u]):
            logger.info(f"Sector direction {u} does not match across the twin apartment")
            return False
    for u in directions:
        for v in directions:
            if relative_position(positive[u], positive[v]) != relative_position(
                negative[u], negative[v]
            ):
                return False
    return True
