"""Tests for the JSON codec."""

import json
from fractions import Fraction

import pytest

from twincity.errors import DeterminantNotOne, FieldMismatch, NonSplitDenominator, ParseError
from twincity.ring.codec import (
    decode_matrix,
    decode_rational,
    decode_scalar,
    dumps,
    encode_matrix,
    encode_scalar,
    parse_matrix,
    split_denominator,
)
from twincity.ring.laurent import LaurentPoly
from twincity.ring.rational import RationalFunction


class TestScalars:
    """Tests for scalar encoding."""

    def test_rational_scalars(self, q):
        assert decode_scalar("-1/2", q) == q.convert(Fraction(-1, 2))
        assert decode_scalar(3, q) == q.convert(3)
        assert encode_scalar(q, q.convert(Fraction(5, 3))) == "5/3"

    def test_gaussian_scalar(self, q):
        value = decode_scalar({"re": "1/2", "im": "3"}, q)
        assert value == q.gaussian(Fraction(1, 2), 3)
        assert encode_scalar(q, value) == {"re": "1/2", "im": "3"}

    def test_finite_field_reduces(self, f3):
        assert encode_scalar(f3, decode_scalar(5, f3)) == "2"

    def test_gaussian_rejected_in_finite_field(self, f2):
        with pytest.raises(FieldMismatch):
            decode_scalar({"re": "0", "im": "1"}, f2)

    def test_booleans_rejected(self, q):
        with pytest.raises(ParseError):
            decode_scalar(True, q)


class TestRationalDecoding:
    """Tests for rational function documents."""

    def test_laurent_list(self, q):
        r = decode_rational([[-1, "2"], [3, 1]], q)
        assert r == RationalFunction(LaurentPoly({-1: 2, 3: 1}, q))

    def test_factored_denominator(self, q):
        r = decode_rational({"num": [[0, 1]], "den": [["2", 1]]}, q)
        assert r == RationalFunction.simple_pole(2, q)

    def test_denominator_polynomial(self, q):
        """Test that 1 / (2t^2 - 5t + 2) splits as 1/2 / ((t - 2)(t - 1/2))."""
        r = decode_rational({"num": [[0, 1]], "den_poly": [[2, 2], [1, -5], [0, 2]]}, q)
        assert r.pole_degree == 2
        assert {root for root, _ in r.poles} == {q.convert(2), q.convert(Fraction(1, 2))}
        assert r.numerator == LaurentPoly({0: Fraction(1, 2)}, q)

    def test_denominator_with_power_of_t(self, q):
        """Test that 1 / (t^3 - 2t^2) keeps the t^-2 in the numerator."""
        r = decode_rational({"num": [[0, 1]], "den_poly": [[3, 1], [2, -2]]}, q)
        assert r == RationalFunction.simple_pole(2, q).shift(-2)

    def test_gaussian_split(self, q):
        """Test that t^2 + 4 splits over Q(i)."""
        scale, low, roots = split_denominator(LaurentPoly({2: 1, 0: 4}, q))
        assert low == 0
        assert {root for root, _ in roots} == {q.gaussian(0, 2), q.gaussian(0, -2)}

    def test_non_split_denominator(self, q):
        with pytest.raises(NonSplitDenominator):
            decode_rational({"num": [[0, 1]], "den_poly": [[2, 1], [0, -2]]}, q)

    def test_malformed_pole(self, q):
        with pytest.raises(ParseError):
            decode_rational({"num": [[0, 1]], "den": [["2", 0]]}, q)


class TestMatrixDocuments:
    """Tests for matrix documents."""

    def test_plain_entries_list(self, q, plus_twist):
        obj = {"entries": [[[[0, 1]], {"num": [[0, 1]], "den": [["2", 1]]}], [0, 1]]}
        assert decode_matrix(obj) == plus_twist

    def test_encode_then_decode(self, plus_twist, minus_twist, translation2):
        g = plus_twist @ translation2 @ minus_twist
        assert decode_matrix(json.loads(dumps(encode_matrix(g)))) == g

    def test_field_tag(self, f2):
        m = decode_matrix({"n": 2, "field": "F2", "entries": [[1, [[1, 1]]], [0, 1]]})
        assert m.field == f2

    def test_entry_error_names_position(self):
        obj = {"entries": [[1, {"num": [[0, 1]], "den_poly": [[2, 1], [0, -2]]}], [0, 1]]}
        with pytest.raises(NonSplitDenominator) as excinfo:
            decode_matrix(obj)
        assert excinfo.value.to_dict()["row"] == 1
        assert excinfo.value.to_dict()["column"] == 2

    def test_determinant_checked(self):
        with pytest.raises(DeterminantNotOne):
            decode_matrix({"entries": [[[[1, 1]], 0], [0, 1]]})

    def test_wrong_shape(self):
        with pytest.raises(ParseError):
            decode_matrix({"n": 2, "entries": [[1, 0, 0], [0, 1, 0]]})

    def test_missing_entries(self):
        with pytest.raises(ParseError):
            decode_matrix({"n": 2})

    def test_parse_matrix_file(self, tmp_path, swap2):
        path = tmp_path / "swap.json"
        path.write_text(json.dumps({"n": 2, "field": "Q", "entries": [[0, 1], [-1, 0]]}))
        assert parse_matrix(path) == swap2

    def test_invalid_json_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            parse_matrix(path)

    def test_dumps_is_deterministic(self):
        assert dumps({"b": 1, "a": [1, 2]}) == '{"a": [1,2],"b": 1}'
