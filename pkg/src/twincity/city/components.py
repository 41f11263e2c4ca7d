"""Connected components of the city and the pseudo-distance between them."""

import logging

from twincity.building.distance import codelta, relative_matrix
from twincity.building.models import Chamber
from twincity.city.models import CityMetricValue, Component, ComponentRegistry
from twincity.errors import RankMismatch, SignMismatch
from twincity.ring.matrix import LoopMatrix
from twincity.models import Sign
from twincity.ring.models import Grade
from twincity.ring.regularity import annulus_grade, regularity_class
from twincity.weyl.models import AffinePermutation

logger = logging.getLogger(__name__)


def _twist_in_component(twist: LoopMatrix, other: LoopMatrix, chamber: Chamber) -> bool:
    return regularity_class(twist.inverse() @ other).admits(chamber.sign)


def same_component(c: Chamber, d: Chamber) -> bool:
    """Whether delta(c, d) is finite, i.e. g^-1 f lies in the standard subgroup of the sign.

    Raises:
        SignMismatch: The chambers have different signs
    """
    if c.sign is not d.sign:
        raise SignMismatch(f"Components of different signs {c.sign.value}, {d.sign.value}")
    return regularity_class(relative_matrix(c, d)).admits(c.sign)


def component_of(chamber: Chamber, registry: ComponentRegistry) -> Component:
    """The registered component containing ``chamber``, registering it when new."""
    if chamber.n != registry.n:
        raise RankMismatch(f"Chamber of size {chamber.n} for a registry with n = {registry.n}")
    if not registry.entries[chamber.sign]:
        registry.add(chamber.sign, LoopMatrix.identity(registry.n, chamber.field))
    for component in registry.components(chamber.sign):
        if _twist_in_component(component.base_twist, chamber.representative, chamber):
            return component
    return registry.add(chamber.sign, chamber.representative)


def _grade_between(a: LoopMatrix, b: LoopMatrix, sign: Sign | None = None) -> Grade:
    return annulus_grade(a.inverse() @ b, sign)


def pseudo_distance(first: Component, second: Component) -> CityMetricValue:
    """Ultrametric pseudo-distance e^-nu between components of equal sign.

    nu is the largest n such that some map carrying one component to the
    other extends holomorphically to the annulus e^-n <= |t| <= e^n. Poles of
    b1^-1 b2 on the side of the sign can be cleared by re-rooting within
    the components, the others cannot; nu is the grade of the latter, so it
    does not depend on the base twists. Equal components give nu = inf.

    Raises:
        SignMismatch: The components have different signs
    """
    if first.sign is not second.sign:
        raise SignMismatch("pseudo_distance needs components of equal sign")
    nu = _grade_between(first.base_twist, second.base_twist, first.sign)
    logger.debug(f"Component pseudo-distance exponent {nu}")
    return CityMetricValue(nu)


def chamber_nu(c: Chamber, d: Chamber) -> CityMetricValue:
    """Chamber-level version of :func:`pseudo_distance` (depends on the representatives)."""
    if c.sign is not d.sign:
        raise SignMismatch("chamber_nu needs chambers of equal sign")
    return CityMetricValue(_grade_between(c.representative, d.representative))


def cross_codistance(x: Chamber, y: Chamber) -> AffinePermutation:
    """Codistance between chambers of opposite signs in arbitrary components."""
    return codelta(x, y)


def is_isometric_translate(h: LoopMatrix, c: Chamber, d: Chamber) -> bool:
    """Whether h keeps c and d in a common component exactly when they already share one."""
    shifted_c = Chamber(c.sign, h @ c.representative)
    shifted_d = Chamber(d.sign, h @ d.representative)
    return same_component(c, d) == same_component(shifted_c, shifted_d)
