"""Tests for Bruhat and Birkhoff decompositions."""

from fractions import Fraction

import pytest

from twincity.bruhat.decompose import (
    birkhoff,
    decompose,
    exact_bruhat,
    formal_bruhat,
    rational_bruhat,
)
from twincity.bruhat.iwahori import in_iwahori
from twincity.bruhat.poles import split_poles, uniformizer_power
from twincity.errors import InputError, WrongRegularity
from twincity.models import DecompositionMode, Place, Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.weyl.models import AffinePermutation
from twincity.weyl.monomial import weyl_to_monomial

W = AffinePermutation.of


def _upper(q, exponent):
    return LoopMatrix.elementary(2, 1, 2, RationalFunction.monomial(exponent, q), q)


def _lower(q, exponent):
    return LoopMatrix.elementary(2, 2, 1, RationalFunction.monomial(exponent, q), q)


def _assert_exact_witnesses(g, result, left_sign, right_sign):
    assert result.is_exact
    assert result.left_witness @ g @ result.right_witness == weyl_to_monomial(result.label, g.field)
    assert in_iwahori(result.left_witness, left_sign)
    assert in_iwahori(result.right_witness, right_sign)


class TestBruhatLabels:
    """Tests for Bruhat labels on the worked examples."""

    def test_upper_positive_power_is_identity(self, q):
        assert rational_bruhat(_upper(q, 1), Sign.PLUS).label == W(1, 2)

    def test_lower_negative_power_is_affine_reflection(self, q):
        assert rational_bruhat(_lower(q, -1), Sign.PLUS).label == W(0, 3)

    def test_upper_negative_power(self, q):
        assert rational_bruhat(_upper(q, -1), Sign.PLUS).label == W(4, -1)

    def test_monomials_label_themselves(self, swap2, translation2):
        for sign in Sign:
            assert rational_bruhat(swap2, sign).label == W(2, 1)
            assert rational_bruhat(translation2, sign).label == W(3, 0)

    def test_plus_only_twist(self, plus_twist):
        """Test that a constant term in the upper corner gives s_1."""
        result = rational_bruhat(plus_twist, Sign.PLUS)
        assert result.label == W(2, 1)
        assert result.precision_used == 8
        assert not result.is_exact

    def test_wrong_regularity(self, plus_twist, minus_twist):
        with pytest.raises(WrongRegularity):
            rational_bruhat(plus_twist, Sign.MINUS)
        with pytest.raises(WrongRegularity):
            exact_bruhat(minus_twist, Sign.PLUS)

    def test_series_witnesses(self, plus_twist, translation2):
        g = plus_twist @ translation2
        result = rational_bruhat(g, Sign.PLUS)
        expansion = g.expand(Place.ZERO, result.precision_used)
        product = result.left_witness @ expansion @ result.right_witness
        assert product.agrees_with(weyl_to_monomial(result.label, g.field))
        assert in_iwahori(result.right_witness, Sign.PLUS)

    def test_exact_matches_rational(self, plus_twist, translation2, swap2):
        g = plus_twist @ translation2 @ swap2
        exact = exact_bruhat(g, Sign.PLUS)
        assert exact.label == rational_bruhat(g, Sign.PLUS).label
        _assert_exact_witnesses(g, exact, Sign.PLUS, Sign.PLUS)

    def test_negative_exact_witnesses(self, minus_twist, swap2):
        g = swap2 @ minus_twist
        _assert_exact_witnesses(g, exact_bruhat(g, Sign.MINUS), Sign.MINUS, Sign.MINUS)

    def test_formal_bruhat_needs_matching_place(self, translation2):
        with pytest.raises(InputError):
            formal_bruhat(translation2.expand(Place.INFINITY, 4), Sign.PLUS)

    def test_finite_field_rank_three(self, f2):
        g = LoopMatrix(
            [
                [RationalFunction.one(f2), RationalFunction.monomial(1, f2), 0],
                [0, 1, 0],
                [RationalFunction.monomial(-1, f2), RationalFunction.zero(f2), 1],
            ],
            f2,
        )
        result = exact_bruhat(g, Sign.PLUS)
        _assert_exact_witnesses(g, result, Sign.PLUS, Sign.PLUS)


class TestBirkhoff:
    """Tests for the mixed decomposition I- w I+."""

    def test_plus_only_twist_is_trivial(self, plus_twist):
        assert birkhoff(plus_twist).label == W(1, 2)

    def test_monomials(self, swap2, translation2):
        assert birkhoff(swap2).label == W(2, 1)
        assert birkhoff(translation2).label == W(3, 0)

    def test_witness_signs(self, plus_twist, minus_twist, translation2):
        g = minus_twist @ translation2 @ plus_twist
        _assert_exact_witnesses(g, birkhoff(g), Sign.MINUS, Sign.PLUS)

    def test_decompose_dispatch(self, translation2):
        assert decompose(translation2, DecompositionMode.BIRKHOFF).mode is DecompositionMode.BIRKHOFF
        assert decompose(translation2, DecompositionMode.BRUHAT_MINUS, exact=True).is_exact

    def test_to_dict(self, translation2, plus_twist):
        payload = birkhoff(translation2).to_dict()
        assert payload["label"] == {"n": 2, "window": [3, 0]}
        assert payload["length"] == 2
        assert payload["left_witness"]["n"] == 2
        truncated = rational_bruhat(plus_twist, Sign.PLUS).to_dict()
        assert truncated["left_witness"]["truncated"] is True
        assert "right_witness" not in birkhoff(translation2).to_dict(witnesses=False)


def _torus(q, root, *, at_infinity):
    c = q.convert(root)
    return LoopMatrix.diagonal(
        [
            uniformizer_power(c, 1, q, at_infinity=at_infinity),
            uniformizer_power(c, -1, q, at_infinity=at_infinity),
        ],
        q,
    )


class TestBirkhoffRepresentatives:
    """Test that Birkhoff labels are constant on B- g B+ for rational representatives."""

    def test_plus_torus_is_trivial(self, q):
        b = _torus(q, 2, at_infinity=False)
        result = birkhoff(b)
        assert result.label == W(1, 2)
        _assert_exact_witnesses(b, result, Sign.MINUS, Sign.PLUS)

    def test_minus_torus_is_trivial(self, q):
        b = _torus(q, Fraction(1, 3), at_infinity=True)
        result = birkhoff(b)
        assert result.label == W(1, 2)
        _assert_exact_witnesses(b, result, Sign.MINUS, Sign.PLUS)

    def test_label_ignores_representatives(self, q, swap2, translation2):
        b_plus = _torus(q, 2, at_infinity=False) @ LoopMatrix.elementary(
            2, 2, 1, RationalFunction.simple_pole(3, q), q
        )
        b_minus = LoopMatrix.elementary(
            2, 1, 2, RationalFunction.simple_pole(Fraction(1, 3), q), q
        ) @ _torus(q, Fraction(-1, 2), at_infinity=True)
        for m in (swap2, translation2, translation2 @ swap2):
            g = b_minus @ m @ b_plus
            result = birkhoff(g)
            assert result.label == birkhoff(m).label
            _assert_exact_witnesses(g, result, Sign.MINUS, Sign.PLUS)

    def test_split_poles(self, plus_twist, minus_twist, translation2):
        g = minus_twist @ translation2 @ plus_twist
        split = split_poles(g)
        assert split.core.is_laurent
        assert split.left @ g @ split.right == split.core
        assert in_iwahori(split.left, Sign.MINUS)
        assert in_iwahori(split.right, Sign.PLUS)

    def test_laurent_input_is_untouched(self, translation2):
        assert split_poles(translation2).is_trivial
