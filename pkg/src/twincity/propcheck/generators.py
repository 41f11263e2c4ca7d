"""Seeded random generators for loop matrices, Iwahori elements, Weyl group elements and flags.

Every sample draws from its own ``random.Random`` seeded by the config
seed, the suite name and the sample index, so sample streams do not depend
on the order or the number of worker threads.
"""

import random
from fractions import Fraction

from twincity.bruhat.poles import uniformizer_power
from twincity.errors import EmptyPool
from twincity.infinity.flags import flag_from_matrix
from twincity.infinity.models import Flag
from twincity.models import Sign
from twincity.propcheck.models import GeneratorConfig
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import RegularityClass
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import Scalar, ScalarField
from twincity.weyl.affine import from_word
from twincity.weyl.models import AffinePermutation


def derive_rng(cfg: GeneratorConfig, suite: str, index: int) -> random.Random:
    """Independent generator for one sample of one suite."""
    return random.Random(f"{cfg.seed}:{suite}:{index}")


def random_scalar(field: ScalarField, rng: random.Random, *, nonzero: bool = False) -> Scalar:
    if field.is_finite:
        low = 1 if nonzero else 0
        return field.convert(rng.randrange(low, field.p))
    while True:
        value = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2)))
        if value or not nonzero:
            return field.convert(value)


def random_laurent(cfg: GeneratorConfig, rng: random.Random) -> LaurentPoly:
    """Laurent polynomial with exponents in the configured degree window."""
    field = cfg.scalar_field
    terms = {e: random_scalar(field, rng) for e in range(cfg.degree_low, cfg.degree_high + 1)}
    return LaurentPoly(terms, field)


def _random_position(n: int, rng: random.Random) -> tuple[int, int]:
    i, j = rng.sample(range(1, n + 1), 2)
    return i, j


def _choose_poles(
    cfg: GeneratorConfig, rng: random.Random, regularity: RegularityClass | None
) -> list[Fraction]:
    pool = cfg.poles(regularity)
    if not pool:
        return []
    if regularity is None:
        return [c for c in pool if rng.random() < 0.5]
    if regularity is RegularityClass.NEITHER:
        outside = [c for c in pool if abs(c) > 1]
        inside = [c for c in pool if abs(c) < 1]
        return [rng.choice(outside), rng.choice(inside)]
    count = rng.randint(1, len(pool))
    return rng.sample(pool, count)


def random_loop_matrix(
    cfg: GeneratorConfig,
    rng: random.Random,
    regularity: RegularityClass | None = None,
) -> LoopMatrix:
    """Product of random elementary matrices; one simple-pole factor per chosen pool pole.

    Each pole occurs in exactly one factor, so it survives in the product
    and the regularity class of the result is that of the chosen poles.

    Raises:
        EmptyPool: ``regularity`` needs poles that the pool does not have
    """
    field = cfg.scalar_field
    n = cfg.n
    factors: list[LoopMatrix] = []
    for _ in range(cfg.word_length):
        i, j = _random_position(n, rng)
        factors.append(
            LoopMatrix.elementary(n, i, j, RationalFunction.from_laurent(random_laurent(cfg, rng)), field)
        )
    for root in _choose_poles(cfg, rng, regularity):
        i, j = _random_position(n, rng)
        entry = RationalFunction.simple_pole(root, field, random_scalar(field, rng, nonzero=True))
        factors.insert(rng.randint(0, len(factors)), LoopMatrix.elementary(n, i, j, entry, field))
    result = LoopMatrix.identity(n, field)
    for factor in factors:
        result = result @ factor
    return result


def random_iwahori(cfg: GeneratorConfig, rng: random.Random, sign: Sign) -> LoopMatrix:
    """Random element of the Iwahori subgroup of the given sign (Laurent entries)."""
    field = cfg.scalar_field
    n = cfg.n
    bound = max(abs(cfg.degree_low), abs(cfg.degree_high), 1)
    result = LoopMatrix.identity(n, field)
    for _ in range(cfg.word_length):
        i, j = _random_position(n, rng)
        shifts = [
            m
            for m in range(-bound, bound + 1)
            if (i + n * m > j if sign is Sign.PLUS else i + n * m < j)
        ]
        value = RationalFunction.monomial(rng.choice(shifts), field, random_scalar(field, rng))
        result = result @ LoopMatrix.elementary(n, i, j, value, field)
    k = rng.randrange(n - 1)
    a = random_scalar(field, rng, nonzero=True)
    torus = [field.one] * n
    torus[k] = a
    torus[k + 1] = field.inverse(a)
    return result @ LoopMatrix.diagonal(torus, field, validate=False)


def random_rational_iwahori(cfg: GeneratorConfig, rng: random.Random, sign: Sign) -> LoopMatrix:
    """Element of B+ or B- carrying a pool pole on the matching side of the unit circle.

    A torus factor diag(u, 1/u) with u = t - c (sign +) or (t - c)/t (sign -)
    and a unipotent factor with a simple pole at c multiply a Laurent Iwahori
    element. Without a suitable pool pole this is :func:`random_iwahori`.
    """
    base = random_iwahori(cfg, rng, sign)
    regularity = RegularityClass.PLUS_ONLY if sign is Sign.PLUS else RegularityClass.MINUS_ONLY
    try:
        pool = cfg.poles(regularity)
    except EmptyPool:
        return base
    if not pool:
        return base
    field = cfg.scalar_field
    n = cfg.n
    root = field.convert(rng.choice(pool))
    at_infinity = sign is Sign.MINUS
    k = rng.randrange(n - 1)
    torus: list[RationalFunction] = [RationalFunction.one(field)] * n
    torus[k] = uniformizer_power(root, 1, field, at_infinity=at_infinity)
    torus[k + 1] = uniformizer_power(root, -1, field, at_infinity=at_infinity)
    i, j = sorted(_random_position(n, rng), reverse=sign is Sign.PLUS)
    pole = RationalFunction.simple_pole(root, field, random_scalar(field, rng, nonzero=True))
    unipotent = LoopMatrix.elementary(n, i, j, pole, field)
    return base @ LoopMatrix.diagonal(torus, field) @ unipotent


def random_weyl(cfg: GeneratorConfig, rng: random.Random, max_word: int = 4) -> AffinePermutation:
    word = [rng.randrange(cfg.n) for _ in range(rng.randint(0, max_word))]
    return from_word(cfg.n, word)


def random_flag(cfg: GeneratorConfig, rng: random.Random) -> Flag:
    """Flag spanned by the columns of a random determinant-1 matrix."""
    return flag_from_matrix(random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC))


def try_regularity(cfg: GeneratorConfig, regularity: RegularityClass) -> RegularityClass:
    """``regularity`` when the pool supports it, otherwise the algebraic class."""
    try:
        cfg.poles(regularity)
    except EmptyPool:
        return RegularityClass.ALGEBRAIC
    return regularity
