"""JSON encoding of scalars, Laurent polynomials, rational functions and matrices.

Formats:
    scalar         "3", "-1/2" (also plain integers); Gaussian {"re": "1/2", "im": "3"}
    Laurent        [[exponent, scalar], ...]
    rational       {"num": Laurent, "den": [[root, order], ...]}
                   or {"num": Laurent, "den_poly": Laurent} (factored over Q(i))
    matrix         {"n": 2, "field": "Q", "entries": [[entry, ...], ...]}
"""

import json
from pathlib import Path
from typing import Any

import sympy

from twincity.errors import EntryError, FieldMismatch, NonSplitDenominator, ParseError
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import (
    RATIONAL,
    Scalar,
    ScalarField,
    field_from_tag,
    real_imag,
)

T_SYMBOL = sympy.Symbol("t")


# -- scalars ----------------------------------------------------------------


def encode_scalar(field: ScalarField, value: Scalar) -> Any:
    if field.is_finite:
        return str(field.to_int(value))
    re, im = real_imag(value)
    if im:
        return {"re": str(re), "im": str(im)}
    return str(re)


def decode_scalar(obj: Any, field: ScalarField) -> Scalar:
    if isinstance(obj, bool):
        raise ParseError(f"Booleans are not scalars: {obj!r}")
    if isinstance(obj, int | str):
        return field.convert(obj if isinstance(obj, int) else obj)
    if isinstance(obj, dict) and set(obj) <= {"re", "im"}:
        re = field.parse(str(obj.get("re", "0")))
        im = field.parse(str(obj.get("im", "0")))
        if field.is_finite:
            raise FieldMismatch(f"Gaussian scalar {obj!r} in {field.tag}")
        return re + im * field.gaussian(0, 1)
    raise ParseError(f"Cannot read a scalar from {obj!r}")


# -- polynomials ------------------------------------------------------------


def encode_laurent(poly: LaurentPoly) -> list[list[Any]]:
    return [[exponent, encode_scalar(poly.field, c)] for exponent, c in poly.items()]


def decode_laurent(obj: Any, field: ScalarField) -> LaurentPoly:
    if not isinstance(obj, list):
        return LaurentPoly.constant(decode_scalar(obj, field), field)
    total = LaurentPoly.zero(field)
    for pair in obj:
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)):
            raise ParseError(f"Laurent terms are [exponent, scalar] pairs, got {pair!r}")
        total = total + LaurentPoly.monomial(pair[0], field, decode_scalar(pair[1], field))
    return total


def encode_rational(r: RationalFunction) -> Any:
    if r.is_laurent:
        return encode_laurent(r.numerator)
    return {
        "num": encode_laurent(r.numerator),
        "den": [[encode_scalar(r.field, root), order] for root, order in r.poles],
    }


def split_denominator(poly: LaurentPoly) -> tuple[Scalar, int, list[tuple[Scalar, int]]]:
    """Factor a Laurent polynomial as unit * t^k * prod (t - c)^m over Q(i).

    Raises:
        NonSplitDenominator: If an irreducible factor has degree above one
    """
    if poly.is_zero():
        raise ParseError("Zero denominator")
    field = poly.field
    low = poly.valuation()
    expression = sum(
        (field.domain.to_sympy(c) * T_SYMBOL ** (e - low) for e, c in poly.items()),
        sympy.Integer(0),
    )
    unit, factors = sympy.factor_list(expression, T_SYMBOL, gaussian=True)
    scale = field.convert(field.domain.from_sympy(unit))
    roots: list[tuple[Scalar, int]] = []
    for factor, multiplicity in factors:
        factor_poly = sympy.Poly(factor, T_SYMBOL)
        if factor_poly.degree() != 1:
            raise NonSplitDenominator(f"Factor {factor} does not split over Q(i)")
        a1, a0 = (field.domain.from_sympy(c) for c in factor_poly.all_coeffs())
        scale = scale * a1**multiplicity
        roots.append((-a0 / a1, int(multiplicity)))
    return scale, low, roots


def decode_rational(obj: Any, field: ScalarField) -> RationalFunction:
    if not isinstance(obj, dict) or "num" not in obj:
        return RationalFunction(decode_laurent(obj, field))
    numerator = decode_laurent(obj["num"], field)
    if "den_poly" in obj:
        if field.is_finite:
            raise FieldMismatch(f"Denominators are not supported over {field.tag}")
        scale, low, poles = split_denominator(decode_laurent(obj["den_poly"], field))
        numerator = numerator.shift(-low).scale(field.inverse(scale))
        return RationalFunction(numerator, [(root, order) for root, order in poles if root], field)
    poles = []
    for pair in obj.get("den", []):
        if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[1], int) and pair[1] > 0):
            raise ParseError(f"Pole entries are [root, positive order] pairs, got {pair!r}")
        poles.append((decode_scalar(pair[0], field), pair[1]))
    if poles and field.is_finite:
        raise FieldMismatch(f"Poles are not supported over {field.tag}")
    return RationalFunction(numerator, poles, field)


# -- matrices ---------------------------------------------------------------


def encode_matrix(m: LoopMatrix) -> dict[str, Any]:
    return {
        "n": m.n,
        "field": m.field.tag,
        "entries": [[encode_rational(e) for e in row] for row in m.rows],
    }


def decode_matrix(obj: Any, *, default_field: ScalarField = RATIONAL) -> LoopMatrix:
    """Validated loop matrix from its JSON form.

    Raises:
        ParseError: Malformed document (naming the entry when possible)
        DeterminantNotOne: Determinant differs from 1
        NonSplitDenominator: A denominator has an irreducible factor of degree > 1
        PoleOnCircle: Some pole has modulus 1
    """
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError("A matrix document needs an 'entries' array")
    field = field_from_tag(obj["field"]) if "field" in obj else default_field
    entries = obj["entries"]
    n = obj.get("n", len(entries))
    if not isinstance(n, int) or n < 2:
        raise ParseError(f"Matrix size must be an integer >= 2, got {n!r}")
    if len(entries) != n or any(not isinstance(row, list) or len(row) != n for row in entries):
        raise ParseError(f"Expected {n} rows of {n} entries")
    rows = []
    for i, row in enumerate(entries, start=1):
        line = []
        for j, value in enumerate(row, start=1):
            try:
                line.append(decode_rational(value, field))
            except EntryError as exc:
                raise type(exc)(f"Entry ({i},{j}): {exc.detail}", row=i, column=j) from exc
            except (ValueError, TypeError, sympy.PolynomialError) as exc:
                raise ParseError(f"Entry ({i},{j}): {exc}", row=i, column=j) from exc
        rows.append(line)
    return LoopMatrix(rows, field)


def load_json(path: Path | str) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc


def parse_matrix(path: Path | str) -> LoopMatrix:
    """Read and validate a matrix file."""
    return decode_matrix(load_json(path))


def dumps(obj: Any) -> str:
    """Deterministic JSON rendering used for every document the kernel prints."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), ensure_ascii=False)
