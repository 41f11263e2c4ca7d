"""Global pytest fixtures."""

import pytest

from twincity.config import get_settings


@pytest.fixture(autouse=True)
def reset_settings():
    """Clear the cached settings around every test so env patches take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def q():
    """The rational ground field."""
    from twincity.ring.scalars import RATIONAL

    return RATIONAL


@pytest.fixture
def f2():
    from twincity.ring.scalars import prime_field

    return prime_field(2)


@pytest.fixture
def f3():
    from twincity.ring.scalars import prime_field

    return prime_field(3)


@pytest.fixture
def t(q):
    """The monomial t as a rational function over Q."""
    from twincity.ring.rational import RationalFunction

    return RationalFunction.monomial(1, q)


@pytest.fixture
def make_matrix(q):
    """Build a 2 x 2 (or larger) loop matrix over Q from nested entries."""
    from twincity.ring.matrix import LoopMatrix

    def _make(rows, field=None):
        return LoopMatrix(rows, field or q)

    return _make


@pytest.fixture
def swap2(q):
    """[[0, 1], [-1, 0]], the finite reflection s_1 for n = 2."""
    from twincity.ring.matrix import LoopMatrix

    return LoopMatrix([[0, 1], [-1, 0]], q)


@pytest.fixture
def translation2(q):
    """diag(t, t^-1), the translation [3, 0]."""
    from twincity.ring.matrix import LoopMatrix
    from twincity.ring.rational import RationalFunction

    return LoopMatrix.diagonal(
        [RationalFunction.monomial(1, q), RationalFunction.monomial(-1, q)], q
    )


@pytest.fixture
def plus_twist(q):
    """[[1, 1/(t-2)], [0, 1]], a PlusOnly matrix."""
    from twincity.ring.matrix import LoopMatrix
    from twincity.ring.rational import RationalFunction

    return LoopMatrix.elementary(2, 1, 2, RationalFunction.simple_pole(2, q), q)


@pytest.fixture
def minus_twist(q):
    """[[1, 0], [1/(t-1/3), 1]], a MinusOnly matrix."""
    from fractions import Fraction

    from twincity.ring.matrix import LoopMatrix
    from twincity.ring.rational import RationalFunction

    return LoopMatrix.elementary(2, 2, 1, RationalFunction.simple_pole(Fraction(1, 3), q), q)


@pytest.fixture
def std_plus(q):
    from twincity.building.distance import standard_chamber
    from twincity.models import Sign

    return standard_chamber(2, Sign.PLUS, q)


@pytest.fixture
def std_minus(q):
    from twincity.building.distance import standard_chamber
    from twincity.models import Sign

    return standard_chamber(2, Sign.MINUS, q)


@pytest.fixture
def f2_config():
    """Small generator config over F_2."""
    from twincity.propcheck.models import GeneratorConfig

    return GeneratorConfig(seed=7, field="F2", n=2, samples=6)


@pytest.fixture
def q_config():
    """Generator config over Q with poles on both sides of the unit circle."""
    from twincity.propcheck.models import GeneratorConfig

    return GeneratorConfig(
        seed=11, field="Q", n=2, samples=6, pole_pool=("2", "25", "1/20", "1/3")
    )
