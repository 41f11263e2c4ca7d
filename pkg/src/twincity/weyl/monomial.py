"""Correspondence between monomial matrices and affine permutations.

A monomial matrix sending e_j to c_j t^{k_j} e_{pi(j)} corresponds to the
affine permutation w(j) = pi(j) + n k_j. With this convention
diag(t, t^-1) is [3, 0].
"""

from twincity.errors import DeterminantNotOne, NotMonomial
from twincity.ring.matrix import LoopMatrix, monomial_matrix, permutation_sign
from twincity.ring.scalars import RATIONAL, ScalarField
from twincity.weyl.affine import finite_part, translation_part
from twincity.weyl.models import AffinePermutation, MonomialMatrix


def as_monomial(m: LoopMatrix) -> MonomialMatrix:
    """Read the monomial structure of a loop matrix."""
    perm: list[int] = []
    exponents: list[int] = []
    coefficients = []
    for j in range(1, m.n + 1):
        nonzero = [(i, e) for i, e in enumerate(m.column(j), start=1) if e]
        if len(nonzero) != 1:
            raise NotMonomial(f"Column {j} has {len(nonzero)} nonzero entries")
        row, entry = nonzero[0]
        if not (entry.is_laurent and entry.numerator.is_monomial()):
            raise NotMonomial(f"Entry ({row},{j}) = {entry} is not a monomial")
        exponent, coefficient = entry.numerator.lowest_term()
        perm.append(row)
        exponents.append(exponent)
        coefficients.append(coefficient)
    if sorted(perm) != list(range(1, m.n + 1)):
        raise NotMonomial("Two columns share a row")
    return MonomialMatrix(tuple(perm), tuple(exponents), tuple(coefficients))


def monomial_to_weyl(m: MonomialMatrix | LoopMatrix) -> AffinePermutation:
    """Affine permutation of a determinant-1 monomial matrix."""
    field: ScalarField | None = None
    if isinstance(m, LoopMatrix):
        field = m.field
        m = as_monomial(m)
    n = m.n
    sign = permutation_sign([p - 1 for p in m.perm])
    if sum(m.exponents) != 0:
        raise DeterminantNotOne(f"Monomial exponents sum to {sum(m.exponents)}, expected 0")
    if field is not None:
        product = field.convert(sign)
        for c in m.coefficients:
            product = product * c
        if product != field.one:
            raise DeterminantNotOne("Monomial coefficients do not give determinant 1")
    return AffinePermutation(n, tuple(p + n * k for p, k in zip(m.perm, m.exponents, strict=True)))


def weyl_to_monomial(w: AffinePermutation, field: ScalarField = RATIONAL) -> LoopMatrix:
    """Determinant-1 monomial representative of w (sign carried by column 1)."""
    perm = finite_part(w)
    exponents = translation_part(w)
    sign = permutation_sign([p - 1 for p in perm])
    columns = [
        (perm[j], exponents[j], sign if j == 0 else 1) for j in range(w.n)
    ]
    return monomial_matrix(columns, field)
