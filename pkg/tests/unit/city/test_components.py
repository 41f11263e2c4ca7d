"""Tests for city components, the registry and the pseudo-distance."""

import json
from fractions import Fraction

import pytest

from twincity.building.distance import translate
from twincity.building.models import Chamber
from twincity.city.components import (
    chamber_nu,
    component_of,
    cross_codistance,
    is_isometric_translate,
    pseudo_distance,
    same_component,
)
from twincity.city.models import CityMetricValue, Component, ComponentRegistry
from twincity.errors import ParseError, RankMismatch, SignMismatch
from twincity.models import Sign
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import INFINITE_GRADE
from twincity.ring.rational import RationalFunction


def _upper_twist(q, root):
    return LoopMatrix.elementary(2, 1, 2, RationalFunction.simple_pole(root, q), q)


class TestSameComponent:
    """Tests for component membership."""

    def test_plus_only_twist_stays_in_positive_component(self, std_plus, std_minus, plus_twist):
        assert same_component(std_plus, translate(plus_twist, std_plus))
        assert not same_component(std_minus, translate(plus_twist, std_minus))

    def test_minus_only_twist(self, std_plus, std_minus, minus_twist):
        assert same_component(std_minus, translate(minus_twist, std_minus))
        assert not same_component(std_plus, translate(minus_twist, std_plus))

    def test_signs_must_agree(self, std_plus, std_minus):
        with pytest.raises(SignMismatch):
            same_component(std_plus, std_minus)

    def test_algebraic_translates_are_isometries(self, std_plus, translation2, minus_twist):
        c = std_plus
        d = translate(minus_twist, std_plus)
        assert is_isometric_translate(translation2, c, d)


class TestRegistry:
    """Tests for ComponentRegistry."""

    def test_identity_component_seeded(self, std_plus):
        registry = ComponentRegistry(2)
        component = component_of(std_plus, registry)
        assert component.index == 0
        assert len(registry.components(Sign.PLUS)) == 1
        assert registry.components(Sign.MINUS) == []

    def test_new_component_registered_once(self, std_plus, minus_twist, plus_twist):
        registry = ComponentRegistry(2)
        chamber = translate(minus_twist, std_plus)
        first = component_of(chamber, registry)
        assert first.index == 1
        again = component_of(translate(minus_twist @ plus_twist, std_plus), registry)
        assert again.index == 1
        assert len(registry.components(Sign.PLUS)) == 2

    def test_rank_checked(self, f2):
        from twincity.building.distance import standard_chamber

        with pytest.raises(RankMismatch):
            component_of(standard_chamber(3, Sign.PLUS, f2), ComponentRegistry(2))

    def test_save_and_load(self, tmp_path, std_plus, minus_twist):
        path = tmp_path / "registry.json"
        registry = ComponentRegistry(2)
        component_of(translate(minus_twist, std_plus), registry)
        registry.save(path)
        loaded = ComponentRegistry.load(path, 2)
        assert loaded.entries[Sign.PLUS] == registry.entries[Sign.PLUS]
        assert json.loads(path.read_text())["schema_version"] == 1

    def test_missing_file_is_empty(self, tmp_path):
        registry = ComponentRegistry.load(tmp_path / "absent.json", 2)
        assert registry.components(Sign.PLUS) == []

    def test_malformed_registry(self, tmp_path):
        path = tmp_path / "registry.json"
        path.write_text(json.dumps({"components": [{"sign": "x", "base_twist": {}}]}))
        with pytest.raises(ParseError):
            ComponentRegistry.load(path, 2)


class TestPseudoDistance:
    """Tests for the ultrametric pseudo-distance."""

    @pytest.mark.parametrize(
        "sign,root,nu",
        [
            (Sign.MINUS, 2, 0),
            (Sign.MINUS, 25, 3),
            (Sign.PLUS, Fraction(1, 20), 2),
            (Sign.PLUS, Fraction(1, 3), 1),
        ],
    )
    def test_grade_anchors(self, q, sign, root, nu):
        identity = Component(sign, LoopMatrix.identity(2, q))
        twisted = Component(sign, _upper_twist(q, root), 1)
        assert pseudo_distance(identity, twisted).nu == nu

    @pytest.mark.parametrize("sign,root", [(Sign.PLUS, 25), (Sign.MINUS, Fraction(1, 3))])
    def test_absorbed_twist_is_same_component(self, q, sign, root):
        identity = Component(sign, LoopMatrix.identity(2, q))
        twisted = Component(sign, _upper_twist(q, root), 1)
        assert pseudo_distance(identity, twisted).nu == INFINITE_GRADE

    def test_independent_of_base_twist(self, q):
        identity = Component(Sign.PLUS, LoopMatrix.identity(2, q))
        twist = _upper_twist(q, Fraction(1, 3))
        rerooted = twist @ LoopMatrix.elementary(2, 2, 1, RationalFunction.simple_pole(25, q, 3), q)
        first = pseudo_distance(identity, Component(Sign.PLUS, twist, 1))
        second = pseudo_distance(identity, Component(Sign.PLUS, rerooted, 1))
        assert first.nu == second.nu == 1

    def test_same_twist_is_zero(self, q, plus_twist):
        a = Component(Sign.PLUS, plus_twist)
        value = pseudo_distance(a, a)
        assert value.is_zero
        assert value.to_dict() == {"nu": "inf", "d": "0"}

    def test_ultrametric_on_anchors(self, q):
        a = Component(Sign.MINUS, LoopMatrix.identity(2, q))
        b = Component(Sign.MINUS, _upper_twist(q, 25))
        c = Component(Sign.MINUS, _upper_twist(q, Fraction(1, 20)))
        ab, bc, ac = pseudo_distance(a, b), pseudo_distance(b, c), pseudo_distance(a, c)
        assert ac <= max(ab, bc, key=lambda v: v.value)

    def test_signs_must_agree(self, q):
        identity = LoopMatrix.identity(2, q)
        with pytest.raises(SignMismatch):
            pseudo_distance(Component(Sign.PLUS, identity), Component(Sign.MINUS, identity))

    def test_chamber_nu(self, q, std_plus):
        twisted = Chamber(Sign.PLUS, _upper_twist(q, 25))
        assert chamber_nu(std_plus, twisted).nu == 3

    def test_metric_rendering(self):
        assert CityMetricValue(0).rendered() == "1"
        assert CityMetricValue(2).rendered() == "e^-2"
        assert CityMetricValue(INFINITE_GRADE).value == 0.0
        assert CityMetricValue(3) < CityMetricValue(1)

    def test_cross_codistance(self, std_plus, std_minus, minus_twist):
        x = translate(minus_twist, std_plus)
        assert cross_codistance(x, std_minus).n == 2
