"""Tests for flags at infinity and sector boundaries."""

from dataclasses import replace

import pytest

from twincity.bruhat.iwahori import root_element
from twincity.building.apartment import twin_apartment
from twincity.building.distance import translate
from twincity.building.models import Chamber
from twincity.errors import DegenerateFlag, InputError, ParseError
from twincity.infinity.flags import (
    adjacent_flag,
    apply,
    decode_flag,
    flag_from_matrix,
    is_opposite_flags,
    is_transverse,
    relative_position,
    same_flag,
    standard_flag,
)
from twincity.infinity.models import Flag, SphericalPosition
from twincity.infinity.sectors import (
    boundary_frames,
    boundary_pair_check,
    negative_frame,
    ray_direction,
    sector_directions,
    sector_ray,
    sector_to_flag,
)
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.weyl.models import AffinePermutation
from twincity.weyl.monomial import weyl_to_monomial


def _permutation_flag(q, *perm):
    return flag_from_matrix(weyl_to_monomial(AffinePermutation.of(*perm), q))


class TestRelativePosition:
    """Tests for relative positions of flags."""

    def test_identity(self, q):
        assert relative_position(standard_flag(3, q), standard_flag(3, q)).is_identity()

    @pytest.mark.parametrize("perm", [(2, 1, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)])
    def test_permutation_flags(self, q, perm):
        """Test that the flag of P_w sits at position w from the standard flag."""
        position = relative_position(standard_flag(3, q), _permutation_flag(q, *perm))
        assert position == SphericalPosition(perm)

    def test_opposite_and_transverse(self, q):
        longest = _permutation_flag(q, 3, 2, 1)
        assert is_opposite_flags(standard_flag(3, q), longest)
        assert is_transverse(standard_flag(3, q), longest)
        assert not is_transverse(standard_flag(3, q), standard_flag(3, q))

    def test_group_invariance(self, q, plus_twist, minus_twist):
        g = plus_twist @ minus_twist
        first = standard_flag(2, q)
        second = _permutation_flag(q, 2, 1)
        before = relative_position(first, second)
        assert relative_position(apply(g, first), apply(g, second)) == before

    def test_swapping_arguments_inverts(self, q):
        first = _permutation_flag(q, 2, 3, 1)
        second = _permutation_flag(q, 3, 1, 2)
        forward = relative_position(first, second)
        assert relative_position(second, first) == forward.inverse()

    def test_rational_basis(self, q):
        """Test that rescaling basis vectors by functions keeps the flag."""
        r = RationalFunction.simple_pole(2, q)
        g = LoopMatrix.diagonal([r, RationalFunction.monomial(1, q) - 2], q)
        assert same_flag(flag_from_matrix(g), standard_flag(2, q))


class TestPanelsAndDecoding:
    """Tests for flag panels and documents."""

    def test_adjacent_flag(self, q):
        flag = standard_flag(3, q)
        neighbor = adjacent_flag(flag, 1, 5)
        assert relative_position(flag, neighbor) == SphericalPosition((2, 1, 3))

    def test_panel_index_range(self, q):
        with pytest.raises(ValueError):
            adjacent_flag(standard_flag(2, q), 2, 0)

    def test_decode_flag(self, q):
        flag = decode_flag({"n": 2, "field": "Q", "rows": [[0, 1], [1, [[1, 1]]]]})
        assert relative_position(standard_flag(2, q), flag) == SphericalPosition((2, 1))

    def test_degenerate_rows(self):
        with pytest.raises(DegenerateFlag):
            decode_flag([[1, [[1, 1]]], [[[-1, 1]], 1]])

    def test_malformed_document(self):
        with pytest.raises(ParseError):
            decode_flag({"rows": "nope"})

    def test_flag_shape(self, q):
        with pytest.raises(DegenerateFlag):
            Flag.from_rows([[1, 0, 0]], q)

    def test_position_algebra(self):
        w = SphericalPosition((2, 3, 1))
        assert (w * w.inverse()).is_identity()
        assert w.length == 2
        assert SphericalPosition.longest(3).is_longest()
        assert w.to_dict() == {"perm": [2, 3, 1], "length": 2}


class TestSectors:
    """Tests for sector flags and boundary identification."""

    def test_direction_order(self):
        directions = sector_directions(3)
        assert len(directions) == 6
        assert directions[0].is_identity()
        assert directions[-1].is_longest()

    def test_sector_flag(self, q):
        identity = LoopMatrix.identity(2, q)
        assert relative_position(
            standard_flag(2, q), sector_to_flag(identity, (2, 1))
        ) == SphericalPosition((2, 1))

    def test_translation_keeps_sector_flags(self, q, translation2):
        for u in sector_directions(2):
            base = sector_to_flag(LoopMatrix.identity(2, q), u)
            assert same_flag(sector_to_flag(translation2, u), base)

    def test_invalid_direction(self, q):
        with pytest.raises(InputError):
            sector_to_flag(LoopMatrix.identity(2, q), (1, 1))

    def test_ray_directions(self):
        assert sector_ray((2, 1)) == (-1, 1)
        for u in sector_directions(3):
            ray = sector_ray(u)
            assert ray_direction(ray, Sign.PLUS) == u
            assert ray_direction(ray, Sign.MINUS).perm == tuple(reversed(u.perm))
            assert ray_direction(tuple(-m for m in ray), Sign.MINUS) == u

    def test_negative_frame_differs_by_torus(self, std_plus, std_minus, plus_twist):
        apartment = twin_apartment(translate(plus_twist, std_plus), std_minus)
        d = apartment.frame.inverse() @ negative_frame(apartment)
        for i in range(1, 3):
            for j in range(1, 3):
                entry = d.entry(i, j)
                if i == j:
                    assert entry.is_laurent and entry.numerator.is_constant() and entry
                else:
                    assert entry.is_zero()

    def test_boundary_flags_match(self, std_plus, std_minus, translation2):
        apartment = twin_apartment(translate(translation2, std_plus), std_minus)
        positive, negative = boundary_frames(apartment)
        assert set(positive) == set(negative) == set(sector_directions(2))
        for u in positive:
            assert same_flag(positive[u], negative[u])

    def test_boundary_pair(self, std_plus, std_minus, plus_twist):
        apartment = twin_apartment(translate(plus_twist, std_plus), std_minus)
        assert boundary_pair_check(apartment)
        assert boundary_pair_check(twin_apartment(std_plus, std_minus))

    def test_boundary_pair_controls(self, q, std_plus, std_minus, plus_twist, swap2):
        """Test that another chamber opposite X, or a non-opposite one, breaks the identification."""
        apartment = twin_apartment(translate(plus_twist, std_plus), std_minus)
        lower = root_element(2, Sign.PLUS, 1, 1, q)
        other = Chamber(Sign.MINUS, apartment.frame @ lower)
        assert not boundary_pair_check(replace(apartment, negative=other))
        facing = Chamber(Sign.MINUS, apartment.frame @ swap2)
        assert not boundary_pair_check(replace(apartment, negative=facing))
