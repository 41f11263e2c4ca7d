"""Tests for regularity classes and annulus grades."""

from fractions import Fraction

import pytest

from twincity.errors import PoleOnCircle
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import INFINITE_GRADE, RegularityClass, format_grade
from twincity.ring.rational import RationalFunction
from twincity.ring.regularity import annulus_grade, exp_below, pole_grade, regularity_class


def _twist_pair(q, upper, lower):
    a = RationalFunction.simple_pole(upper, q)
    b = RationalFunction.simple_pole(lower, q)
    return LoopMatrix.elementary(2, 1, 2, a, q) @ LoopMatrix.elementary(2, 2, 1, b, q)


class TestRegularityClass:
    """Tests for regularity_class."""

    def test_classes(self, q, plus_twist, minus_twist, swap2):
        assert regularity_class(swap2) is RegularityClass.ALGEBRAIC
        assert regularity_class(plus_twist) is RegularityClass.PLUS_ONLY
        assert regularity_class(minus_twist) is RegularityClass.MINUS_ONLY
        assert regularity_class(plus_twist @ minus_twist) is RegularityClass.NEITHER

    def test_gaussian_poles(self, q):
        """Test that |1 + 2i| > 1 puts the pole outside the disk."""
        root = q.gaussian(1, 2)
        g = LoopMatrix.elementary(2, 1, 2, RationalFunction.simple_pole(root, q), q)
        assert regularity_class(g) is RegularityClass.PLUS_ONLY

    def test_admits(self):
        from twincity.models import Sign

        assert RegularityClass.ALGEBRAIC.admits(Sign.PLUS)
        assert RegularityClass.ALGEBRAIC.admits(Sign.MINUS)
        assert RegularityClass.PLUS_ONLY.admits(Sign.PLUS)
        assert not RegularityClass.PLUS_ONLY.admits(Sign.MINUS)
        assert RegularityClass.MINUS_ONLY.admits(Sign.MINUS)
        assert not RegularityClass.NEITHER.admits(Sign.PLUS)


class TestAnnulusGrade:
    """Tests for pole and annulus grades."""

    @pytest.mark.parametrize(
        "root,expected",
        [
            (2, 0),
            (25, 3),
            (Fraction(1, 20), 2),
            (Fraction(1, 3), 1),
        ],
    )
    def test_pole_grades(self, q, root, expected):
        assert pole_grade(q.convert(root)) == expected

    def test_unit_circle_has_no_grade(self, q):
        with pytest.raises(PoleOnCircle):
            pole_grade(q.convert(-1))

    def test_algebraic_grade_is_infinite(self, swap2):
        assert annulus_grade(swap2) == INFINITE_GRADE
        assert format_grade(annulus_grade(swap2)) == "inf"

    def test_grade_is_minimum_over_poles(self, q):
        g = _twist_pair(q, 25, Fraction(1, 20))
        assert annulus_grade(g) == 2
        assert format_grade(annulus_grade(g)) == 2

    def test_signed_grade_counts_foreign_poles(self, q):
        g = _twist_pair(q, 25, Fraction(1, 20))
        assert annulus_grade(g, Sign.PLUS) == 2
        assert annulus_grade(g, Sign.MINUS) == 3
        assert annulus_grade(_twist_pair(q, 25, 2), Sign.PLUS) == INFINITE_GRADE

    def test_exp_below(self):
        """Test e^2 ~ 7.389 against nearby rationals."""
        assert exp_below(2, Fraction(7390, 1000))
        assert not exp_below(2, Fraction(7389, 1000))

    def test_exp_below_fails_at_bit_cap(self):
        from unittest.mock import patch

        from twincity.errors import IntervalPrecisionExceeded

        with patch("twincity.ring.regularity._interval_context") as context:
            context.return_value.exp.return_value.__lt__.return_value = None
            with pytest.raises(IntervalPrecisionExceeded):
                exp_below(2, Fraction(7))
