"""Bruhat and Birkhoff decompositions with witnesses.

Three modes share one elimination engine:

- Bruhat+ labels I+ w I+ (expansion at 0),
- Bruhat- labels I- w I- (expansion at infinity),
- Birkhoff labels B- w B+ (mixed; defined on the whole modeled group).
"""

import logging
from dataclasses import replace

from twincity.bruhat.models import DecompositionResult, ReductionStrategy
from twincity.bruhat.poles import split_poles
from twincity.bruhat.reduction import ColumnReducer, columns_of, label_of, right_witness
from twincity.config import get_settings
from twincity.errors import InputError, InsufficientPrecision, PrecisionCapExceeded, WrongRegularity
from twincity.models import DecompositionMode, Place, Sign
from twincity.ring.matrix import LoopMatrix, SeriesMatrix
from twincity.ring.regularity import regularity_class
from twincity.weyl.monomial import weyl_to_monomial

logger = logging.getLogger(__name__)


def _mode_for(sign: Sign) -> DecompositionMode:
    return DecompositionMode.BRUHAT_PLUS if sign is Sign.PLUS else DecompositionMode.BRUHAT_MINUS


def _place_for(sign: Sign) -> Place:
    return Place.ZERO if sign is Sign.PLUS else Place.INFINITY


def formal_bruhat(g: SeriesMatrix, sign: Sign) -> DecompositionResult:
    """Bruhat label of a series matrix in the formal completion at 0 (+) or infinity (-).

    Args:
        g: Series matrix at the place matching ``sign``
        sign: Which Iwahori double cosets to use

    Returns:
        Result with a series left witness and an exact right witness

    Raises:
        InsufficientPrecision: Some column head is hidden by truncation
        NonTerminating: The elimination exceeded its iteration cap
    """
    if g.place is not _place_for(sign):
        raise InputError(f"Sign {sign.value} needs an expansion at {_place_for(sign).value}")
    strategy = ReductionStrategy.for_mode(_mode_for(sign))
    outcome = ColumnReducer(strategy, g.n, g.field).reduce(columns_of(g))
    label = label_of(outcome)
    right = right_witness(outcome, g.field)
    reduced = SeriesMatrix(
        [[outcome.reduced_columns[j][i] for j in range(g.n)] for i in range(g.n)], g.field, g.place
    )
    monomial = weyl_to_monomial(label, g.field)
    left = monomial @ reduced.inverse()
    return DecompositionResult(
        label=label,
        left_witness=left,
        right_witness=right,
        precision_used=g.precision or 0,
        mode=strategy.mode,
        steps=outcome.steps,
    )


def _exact(g: LoopMatrix, mode: DecompositionMode) -> DecompositionResult:
    strategy = ReductionStrategy.for_mode(mode)
    outcome = ColumnReducer(strategy, g.n, g.field).reduce(columns_of(g))
    label = label_of(outcome)
    right = right_witness(outcome, g.field)
    reduced = LoopMatrix.from_columns(outcome.reduced_columns, g.field, validate=False)
    left = weyl_to_monomial(label, g.field) @ reduced.inverse()
    logger.debug(f"{mode.value} label {label} after {outcome.steps} steps")
    return DecompositionResult(
        label=label,
        left_witness=left,
        right_witness=right,
        precision_used=0,
        mode=mode,
        steps=outcome.steps,
    )


def _check_regularity(g: LoopMatrix, sign: Sign) -> None:
    regularity = regularity_class(g)
    if not regularity.admits(sign):
        raise WrongRegularity(
            f"A {regularity.value} matrix is not in the standard {sign.value} subgroup"
        )


def rational_bruhat(g: LoopMatrix, sign: Sign) -> DecompositionResult:
    """Bruhat label of an element of the standard subgroup of the given sign.

    The label is computed from expansions at the matching place with an
    adaptive precision schedule (doubling from ``precision_start`` up to
    ``precision_cap``).

    Raises:
        WrongRegularity: ``g`` is not in the standard subgroup of that sign
        PrecisionCapExceeded: The schedule ran past the cap
    """
    _check_regularity(g, sign)
    settings = get_settings()
    place = _place_for(sign)
    n_terms = settings.precision_start
    while n_terms <= settings.precision_cap:
        try:
            result = formal_bruhat(g.expand(place, n_terms), sign)
            return replace(result, precision_used=n_terms)
        except InsufficientPrecision as exc:
            logger.warning(f"Precision {n_terms} insufficient ({exc.detail}); doubling")
            n_terms *= 2
    raise PrecisionCapExceeded(f"Bruhat label undecided at precision cap {settings.precision_cap}")


def exact_bruhat(g: LoopMatrix, sign: Sign) -> DecompositionResult:
    """Bruhat label with exact rational witnesses (same label as :func:`rational_bruhat`)."""
    _check_regularity(g, sign)
    return _exact(g, _mode_for(sign))


def birkhoff(g: LoopMatrix) -> DecompositionResult:
    """Label w with g in B- w B+.

    Poles outside the unit disk are first moved into the right witness and
    poles inside it into the left one, so the label does not depend on the
    coset representatives. The left witness is then in B- and the right in B+.
    """
    split = split_poles(g)
    result = _exact(split.core, DecompositionMode.BIRKHOFF)
    if split.is_trivial:
        return result
    return replace(
        result,
        left_witness=result.left_witness @ split.left,
        right_witness=split.right @ result.right_witness,
    )


def decompose(g: LoopMatrix, mode: DecompositionMode, *, exact: bool = False) -> DecompositionResult:
    """Dispatch on the decomposition mode."""
    if mode is DecompositionMode.BIRKHOFF:
        return birkhoff(g)
    sign = mode.sign
    assert sign is not None
    return exact_bruhat(g, sign) if exact else rational_bruhat(g, sign)
