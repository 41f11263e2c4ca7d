"""Tests for Weyl distance, codistance and twin apartments."""

import pytest

from twincity.building.apartment import bn_flip, twin_apartment
from twincity.building.distance import (
    codelta,
    delta,
    is_opposite,
    same_chamber,
    standard_chamber,
    translate,
)
from twincity.building.models import Chamber, DistanceValue
from twincity.errors import NotOpposite, SignMismatch
from twincity.models import Sign
from twincity.propcheck.generators import derive_rng, random_loop_matrix, random_rational_iwahori
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.weyl.models import AffinePermutation

W = AffinePermutation.of


class TestDelta:
    """Tests for the Weyl distance."""

    def test_translation_distance(self, std_plus, translation2):
        assert delta(std_plus, translate(translation2, std_plus)).label == W(3, 0)

    def test_symmetry_inverts_label(self, std_plus, translation2, plus_twist):
        c = translate(plus_twist, std_plus)
        d = translate(translation2, std_plus)
        assert delta(d, c).label == delta(c, d).label.inverse()

    def test_rational_twist_in_same_component(self, std_plus, plus_twist):
        assert delta(std_plus, translate(plus_twist, std_plus)).label == W(2, 1)

    def test_other_component_is_infinite(self, std_plus, std_minus, plus_twist, minus_twist):
        assert not delta(std_plus, translate(minus_twist, std_plus)).is_finite
        assert not delta(std_minus, translate(plus_twist, std_minus)).is_finite

    def test_signs_must_agree(self, std_plus, std_minus):
        with pytest.raises(SignMismatch):
            delta(std_plus, std_minus)

    def test_same_chamber_ignores_representative(self, q, std_plus):
        from fractions import Fraction

        torus = LoopMatrix.diagonal([3, Fraction(1, 3)], q)
        assert same_chamber(std_plus, Chamber(Sign.PLUS, torus))
        assert not same_chamber(std_plus, Chamber(Sign.MINUS, torus))

    def test_distance_value_dict(self):
        assert DistanceValue.infinite().to_dict() == {"finite": False}
        assert DistanceValue.finite(W(2, 1)).to_dict()["length"] == 1
        assert str(DistanceValue.infinite()) == "inf"


class TestCodelta:
    """Tests for codistance and opposition."""

    def test_standard_pair_is_opposite(self, std_plus, std_minus):
        assert is_opposite(std_plus, std_minus)
        assert is_opposite(std_minus, std_plus)

    def test_swap_codistance(self, std_plus, std_minus, swap2):
        assert codelta(translate(swap2, std_plus), std_minus) == W(2, 1)

    def test_argument_order_inverts(self, std_plus, std_minus, translation2):
        x = translate(translation2, std_plus)
        assert codelta(std_minus, x) == codelta(x, std_minus).inverse()

    def test_codistance_across_components(self, std_minus, plus_twist, minus_twist):
        """Test that codistance is defined for chambers in any components."""
        x = Chamber(Sign.PLUS, minus_twist @ plus_twist)
        assert codelta(x, std_minus).n == 2

    def test_rational_representative_of_standard_chamber(self, q, std_plus, std_minus):
        """Test that diag(t - 2, 1/(t - 2)) in B+ represents the standard positive chamber."""
        t_minus_two = RationalFunction(LaurentPoly({1: 1, 0: -2}, q))
        b = LoopMatrix.diagonal([t_minus_two, RationalFunction.simple_pole(2, q)], q)
        x = Chamber(Sign.PLUS, b)
        assert same_chamber(x, std_plus)
        assert codelta(x, std_minus) == codelta(std_plus, std_minus) == W(1, 2)
        assert is_opposite(x, std_minus)

    def test_codistance_constant_on_rational_cosets(self, q_config, std_minus):
        for k in range(3):
            rng = derive_rng(q_config, "codelta", k)
            g = random_loop_matrix(q_config, rng)
            x = Chamber(Sign.PLUS, g @ random_rational_iwahori(q_config, rng, Sign.PLUS))
            y = Chamber(Sign.MINUS, random_rational_iwahori(q_config, rng, Sign.MINUS))
            assert codelta(x, y) == codelta(Chamber(Sign.PLUS, g), std_minus)
            assert codelta(y, x) == codelta(x, y).inverse()

    def test_signs_must_differ(self, std_plus):
        with pytest.raises(SignMismatch):
            codelta(std_plus, std_plus)


class TestTwinApartment:
    """Tests for twin apartments."""

    def test_standard_apartment(self, std_plus, std_minus, swap2, plus_twist):
        apartment = twin_apartment(std_plus, std_minus)
        assert same_chamber(apartment.chamber(W(1, 2), Sign.PLUS), std_plus)
        assert apartment.contains(translate(swap2, std_plus))
        assert not apartment.contains(translate(plus_twist, std_plus))

    def test_positions_match_distances(self, std_plus, std_minus, plus_twist):
        x = translate(plus_twist, std_plus)
        apartment = twin_apartment(x, std_minus)
        for w, chamber in apartment.enumerate(2, Sign.PLUS):
            assert delta(x, chamber).label == w
            assert codelta(std_minus, chamber) == w

    def test_enumeration_order(self, std_plus, std_minus):
        labels = [w for w, _ in twin_apartment(std_plus, std_minus).enumerate(1, Sign.MINUS)]
        assert labels == [W(1, 2), W(0, 3), W(2, 1)]

    def test_requires_opposite_pair(self, std_plus, std_minus, swap2):
        with pytest.raises(NotOpposite):
            twin_apartment(translate(swap2, std_plus), std_minus)

    def test_requires_signs(self, std_plus, std_minus):
        with pytest.raises(SignMismatch):
            twin_apartment(std_minus, std_plus)


class TestFlip:
    """Tests for the BN-flip."""

    def test_flip_changes_sign(self, std_plus, std_minus):
        assert same_chamber(bn_flip(std_plus), std_minus)

    def test_flip_is_involution(self, std_plus, plus_twist, translation2):
        c = translate(plus_twist @ translation2, std_plus)
        assert same_chamber(bn_flip(bn_flip(c)), c)

    def test_flip_preserves_opposition(self, std_plus, std_minus, plus_twist):
        x = translate(plus_twist, std_plus)
        assert is_opposite(bn_flip(x), bn_flip(std_minus)) == is_opposite(x, std_minus)

    def test_standard_chamber_field(self, f3):
        assert standard_chamber(3, Sign.PLUS, f3).field == f3
