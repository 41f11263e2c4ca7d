"""Brute-force oracles for decompositions and chamber counts.

The decomposition oracle never eliminates. It multiplies the input on the
right by elementary root elements of the right Iwahori, breadth first, and
accepts a product x as soon as x M_w^-1 lies in the left Iwahori for the w
read off the column heads of x. A double coset I w I is covered by I M_w
times products of at most l(w) root elements, so at depth max_length the
search is exhaustive for labels of length <= max_length.
"""

import logging
from collections import deque
from itertools import product

from twincity.bruhat.iwahori import in_iwahori, iwahori_generators
from twincity.building.distance import standard_chamber
from twincity.building.panels import chamber_ball
from twincity.config import get_settings
from twincity.errors import InputError, InvalidWindow, NotFound
from twincity.models import DecompositionMode, Place, Sign
from twincity.ring.laurent import LaurentPoly
from twincity.ring.matrix import LoopMatrix
from twincity.ring.scalars import ScalarField
from twincity.weyl.affine import elements_up_to_length
from twincity.weyl.models import AffinePermutation
from twincity.weyl.monomial import weyl_to_monomial

logger = logging.getLogger(__name__)


def iwahori_sides(mode: DecompositionMode) -> tuple[Sign, Sign]:
    """Iwahori signs acting on the left and on the right."""
    if mode is DecompositionMode.BIRKHOFF:
        return Sign.MINUS, Sign.PLUS
    sign = mode.sign
    assert sign is not None
    return sign, sign


def _candidate(x: LoopMatrix, left_sign: Sign) -> AffinePermutation | None:
    """The only w for which x could lie in I M_w: extremal Z-rows of the columns."""
    window = []
    for j in range(1, x.n + 1):
        z_rows = []
        for i, entry in enumerate(x.column(j), start=1):
            if entry.is_zero():
                continue
            if left_sign is Sign.PLUS:
                z_rows.append(i + x.n * entry.val(Place.ZERO))
            else:
                z_rows.append(i - x.n * entry.val(Place.INFINITY))
        window.append(min(z_rows) if left_sign is Sign.PLUS else max(z_rows))
    try:
        return AffinePermutation(x.n, tuple(window))
    except InvalidWindow:
        return None


def oracle_bruhat_bfs(
    g: LoopMatrix,
    mode: DecompositionMode,
    max_length: int | None = None,
    truncation: int | None = None,
) -> AffinePermutation:
    """Double-coset label by breadth-first search over right generator multiplications.

    Args:
        g: Laurent matrix over a finite field
        mode: Which double cosets (Bruhat +, Bruhat - or Birkhoff)
        max_length: Search depth, the largest label length that is guaranteed to be found
        truncation: Exponent bound for the root elements

    Raises:
        InputError: ``g`` is not a Laurent matrix over a finite field
        NotFound: No label within ``max_length`` multiplications
    """
    settings = get_settings()
    max_length = settings.oracle_max_length if max_length is None else max_length
    truncation = settings.oracle_truncation if truncation is None else truncation
    if not g.field.is_finite or not g.is_laurent:
        raise InputError("The oracle runs on Laurent matrices over a finite field")
    left_sign, right_sign = iwahori_sides(mode)
    nonzero = [c for c in g.field.elements() if c]
    generators = iwahori_generators(g.n, right_sign, g.field, truncation, nonzero)
    seen = {g}
    queue = deque([(g, 0)])
    while queue:
        current, depth = queue.popleft()
        w = _candidate(current, left_sign)
        if w is not None and in_iwahori(current @ weyl_to_monomial(w, g.field).inverse(), left_sign):
            logger.debug(f"Oracle found {w} at depth {depth} after {len(seen)} products")
            return w
        if depth == max_length:
            continue
        for y in generators:
            candidate = current @ y
            if candidate not in seen:
                seen.add(candidate)
                queue.append((candidate, depth + 1))
    raise NotFound(f"No double coset label within {max_length} generator multiplications")


def small_matrices(field: ScalarField, n: int, low: int, high: int) -> list[LoopMatrix]:
    """Every determinant-1 n x n matrix whose entries have exponents in [low, high].

    Only meant for tiny fields and windows; the count grows like
    |F|^(n^2 (high - low + 1)).
    """
    if not field.is_finite:
        raise InputError("Enumeration needs a finite field")
    exponents = range(low, high + 1)
    polys = [
        LaurentPoly(dict(zip(exponents, coefficients, strict=True)), field)
        for coefficients in product(field.elements(), repeat=len(exponents))
    ]
    found = []
    for entries in product(polys, repeat=n * n):
        rows = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        candidate = LoopMatrix(rows, field, validate=False)
        if candidate.det() == 1:
            found.append(candidate)
    logger.info(f"Enumerated {len(found)} matrices over {field.tag} with exponents in [{low}, {high}]")
    return found


def chamber_counts(
    field: ScalarField, n: int, radius: int, sign: Sign = Sign.PLUS
) -> dict[AffinePermutation, int]:
    """Number of chambers at each distance w with l(w) <= radius from the standard chamber."""
    ball = chamber_ball(standard_chamber(n, sign, field), radius)
    counts = ball.counts()
    for w in elements_up_to_length(n, radius):
        counts.setdefault(w, 0)
    return counts
