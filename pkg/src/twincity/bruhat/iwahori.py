"""Iwahori subgroups: membership tests, root subgroups and simple reflections.

The positive Iwahori I+ consists of matrices regular at 0 whose residue at 0
is lower triangular and invertible: entry (i, j) only carries terms t^m with
i + n m >= j, and the diagonal residues are nonzero. The negative Iwahori I-
is the mirror image at infinity (terms with i + n m <= j).
"""

from collections.abc import Sequence
from typing import Any

from twincity.models import Place, Sign
from twincity.ring.matrix import LoopMatrix, SeriesMatrix
from twincity.ring.rational import RationalFunction
from twincity.ring.regularity import regularity_class
from twincity.ring.scalars import ScalarField
from twincity.weyl.affine import simple_reflection
from twincity.weyl.monomial import weyl_to_monomial


def _entry_ok(entry: RationalFunction, i: int, j: int, n: int, sign: Sign) -> bool:
    if entry.is_zero():
        return i != j
    if sign is Sign.PLUS:
        low = entry.val(Place.ZERO)
        if i == j:
            return low == 0
        return i + n * low > j
    high = -entry.val(Place.INFINITY)
    if i == j:
        return high == 0
    return i + n * high < j


def _series_entry_ok(matrix: SeriesMatrix, i: int, j: int, sign: Sign) -> bool:
    entry = matrix.entry(i, j)
    n = matrix.n
    lead = entry.leading()
    if lead is None:
        if entry.is_exact:
            return i != j
        bound = entry.precision if entry.precision is not None else 0
        exponent = bound if sign is Sign.PLUS else -bound
        # unknown entries pass only when every hidden term is admissible
        return i != j and (i + n * exponent > j if sign is Sign.PLUS else i + n * exponent < j)
    exponent = entry.t_exponent(lead[0])
    if i == j:
        return exponent == 0
    return i + n * exponent > j if sign is Sign.PLUS else i + n * exponent < j


def in_iwahori(m: LoopMatrix | SeriesMatrix, sign: Sign) -> bool:
    """Membership in B+ (sign +) or B- (sign -).

    Loop matrices must be regular on the side of the sign and carry the
    residue shape of the Iwahori; series matrices are tested on shape alone.
    """
    if isinstance(m, SeriesMatrix):
        expected = Place.ZERO if sign is Sign.PLUS else Place.INFINITY
        if m.place is not expected:
            raise ValueError(f"Series at {m.place.value} cannot test {sign.value}-membership")
        return all(
            _series_entry_ok(m, i, j, sign) for i in range(1, m.n + 1) for j in range(1, m.n + 1)
        )
    if not regularity_class(m).admits(sign):
        return False
    return all(
        _entry_ok(m.entry(i, j), i, j, m.n, sign)
        for i in range(1, m.n + 1)
        for j in range(1, m.n + 1)
    )


def root_element(n: int, sign: Sign, s: int, a: Any, field: ScalarField) -> LoopMatrix:
    """Element of the simple root subgroup of type s inside the Iwahori of the given sign.

    For sign + this is E_{i+1,i}(a) (or E_{1,n}(a t) for s = 0); for sign - it
    is E_{i,i+1}(a) (or E_{n,1}(a / t)).
    """
    value = field.convert(a)
    if sign is Sign.PLUS:
        if s == 0:
            return LoopMatrix.elementary(n, 1, n, RationalFunction.monomial(1, field, value), field)
        return LoopMatrix.elementary(n, s + 1, s, value, field)
    if s == 0:
        return LoopMatrix.elementary(n, n, 1, RationalFunction.monomial(-1, field, value), field)
    return LoopMatrix.elementary(n, s, s + 1, value, field)


def simple_representative(n: int, s: int, field: ScalarField) -> LoopMatrix:
    """Determinant-1 monomial matrix representing s_s."""
    return weyl_to_monomial(simple_reflection(n, s), field)


def iwahori_generators(
    n: int, sign: Sign, field: ScalarField, max_shift: int, coefficients: Sequence[Any] = (1,)
) -> list[LoopMatrix]:
    """Elementary generators E_{ij}(c t^m) of the Iwahori with |m| <= max_shift.

    Together with the constant torus these generate the Iwahori modulo
    terms beyond the shift bound; used by the brute-force oracle.
    """
    generators = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for m in range(-max_shift, max_shift + 1):
                z_row = i + n * m
                if (sign is Sign.PLUS and z_row > j) or (sign is Sign.MINUS and z_row < j):
                    generators.extend(
                        LoopMatrix.elementary(n, i, j, RationalFunction.monomial(m, field, c), field)
                        for c in coefficients
                    )
    return generators
