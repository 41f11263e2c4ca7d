"""Ring domain - exact scalars, Laurent polynomials, rational functions, series."""

from twincity.ring.codec import (
    decode_matrix,
    decode_rational,
    dumps,
    encode_matrix,
    encode_rational,
    parse_matrix,
)
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix, SeriesMatrix
from twincity.ring.models import INFINITE_GRADE, FieldKind, Grade, RegularityClass
from twincity.ring.rational import RationalFunction, val
from twincity.ring.regularity import annulus_grade, pole_grade, regularity_class
from twincity.ring.scalars import (
    GAUSSIAN,
    RATIONAL,
    ScalarField,
    field_from_tag,
    prime_field,
)
from twincity.ring.series import TruncatedSeries, expand

__all__ = [
    "FieldKind",
    "ScalarField",
    "RATIONAL",
    "GAUSSIAN",
    "prime_field",
    "field_from_tag",
    "LaurentPoly",
    "RationalFunction",
    "TruncatedSeries",
    "LoopMatrix",
    "SeriesMatrix",
    "RegularityClass",
    "Grade",
    "INFINITE_GRADE",
    "val",
    "expand",
    "regularity_class",
    "annulus_grade",
    "pole_grade",
    "decode_matrix",
    "encode_matrix",
    "decode_rational",
    "encode_rational",
    "parse_matrix",
    "dumps",
]
