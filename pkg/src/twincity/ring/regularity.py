"""Pole-location regularity classes and annulus grades of loop matrices."""

import logging
from fractions import Fraction
from functools import lru_cache

from mpmath.ctx_iv import MPIntervalContext

from twincity.config import get_settings
from twincity.errors import IntervalPrecisionExceeded, PoleOnCircle
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import INFINITE_GRADE, Grade, RegularityClass
from twincity.ring.scalars import Scalar, format_scalar, modulus_squared

logger = logging.getLogger(__name__)


def regularity_class(m: LoopMatrix) -> RegularityClass:
    """Classify a loop matrix by the location of its poles in C*."""
    outside = inside = False
    for root in m.poles():
        size = modulus_squared(root)
        if size == 1:
            raise PoleOnCircle(f"Pole {format_scalar(m.field, root)} lies on the unit circle")
        if size > 1:
            outside = True
        else:
            inside = True
    if outside and inside:
        return RegularityClass.NEITHER
    if outside:
        return RegularityClass.PLUS_ONLY
    if inside:
        return RegularityClass.MINUS_ONLY
    return RegularityClass.ALGEBRAIC


@lru_cache(maxsize=8)
def _interval_context(bits: int) -> MPIntervalContext:
    """Interval context at a fixed working precision, never mutated afterwards."""
    ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def exp_below(exponent: int, bound: Fraction) -> bool:
    """Decide e^exponent < bound with adaptive interval precision.

    Equality never happens for exponent > 0 and rational bound because e is
    transcendental, so refinement always terminates below the bit cap.
    """
    settings = get_settings()
    bits = settings.interval_bits_start
    while bits <= settings.interval_bits_cap:
        ctx = _interval_context(bits)
        power = ctx.exp(exponent)
        target = ctx.mpf(bound.numerator) / ctx.mpf(bound.denominator)
        decided = power < target
        if decided is not None:
            return bool(decided)
        logger.debug(f"Interval comparison e^{exponent} vs {bound} undecided at {bits} bits")
        bits *= 2
    raise IntervalPrecisionExceeded(
        f"Could not separate e^{exponent} from {bound} within {settings.interval_bits_cap} bits"
    )


def pole_grade(root: Scalar) -> int:
    """Largest n >= 0 such that the annulus e^-n <= |z| <= e^n misses the pole."""
    size = modulus_squared(root)
    if size == 1:
        raise PoleOnCircle("Pole on the unit circle has no grade")
    ratio = size if size > 1 else 1 / size
    # |ln|c|| > n  <=>  e^(2n) < |c|^2 (or its inverse)
    grade = 0
    while exp_below(2 * (grade + 1), ratio):
        grade += 1
    return grade


def annulus_grade(m: LoopMatrix, sign: Sign | None = None) -> Grade:
    """Minimal pole grade over all entries; infinite for algebraic matrices.

    With a sign only the poles that the standard subgroup of that sign cannot
    absorb are counted: those inside the unit disk for + and outside it for -.
    """
    roots = m.poles()
    if sign is not None:
        roots = {root for root in roots if (modulus_squared(root) < 1) == (sign is Sign.PLUS)}
    grades = [pole_grade(root) for root in roots]
    return min(grades) if grades else INFINITE_GRADE
