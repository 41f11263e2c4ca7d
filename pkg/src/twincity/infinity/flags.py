"""Complete flags over Q(t): relative position, group action, panels and opposition."""

import logging
from typing import Any

from twincity.errors import DegenerateFlag, ParseError, RankMismatch
from twincity.infinity.linalg import rank
from twincity.infinity.models import Flag, SphericalPosition, Vector
from twincity.ring.codec import decode_rational
from twincity.ring.matrix import LoopMatrix
from twincity.ring.rational import RationalFunction
from twincity.ring.scalars import RATIONAL, ScalarField, field_from_tag

logger = logging.getLogger(__name__)


def check_flag(flag: Flag) -> Flag:
    """Reject bases that are not linearly independent over F(t).

    Raises:
        DegenerateFlag: The basis has rank < n
    """
    found = rank(flag.rows, flag.field)
    if found != flag.n:
        raise DegenerateFlag(f"Flag basis has rank {found}, expected {flag.n}")
    return flag


def standard_flag(n: int, field: ScalarField = RATIONAL) -> Flag:
    """The coordinate flag <e_1> < <e_1, e_2> < ..."""
    return flag_from_matrix(LoopMatrix.identity(n, field))


def flag_from_matrix(g: LoopMatrix) -> Flag:
    """The flag spanned by the columns of g in order."""
    return Flag(tuple(g.column(j) for j in range(1, g.n + 1)), g.field)


def _apply_vector(g: LoopMatrix, v: Vector) -> Vector:
    zero = RationalFunction.zero(g.field)
    result = []
    for row in g.rows:
        total = zero
        for a, b in zip(row, v, strict=True):
            if a and b:
                total = total + a * b
        result.append(total)
    return tuple(result)


def apply(g: LoopMatrix, flag: Flag) -> Flag:
    """Image g . F."""
    if g.n != flag.n:
        raise RankMismatch(f"Cannot apply a {g.n}x{g.n} matrix to a flag in dimension {flag.n}")
    return Flag(tuple(_apply_vector(g, v) for v in flag.rows), flag.field)


def dimension_array(first: Flag, second: Flag) -> list[list[int]]:
    """d[i][j] = dim(V_i cap U_j) for 0 <= i, j <= n."""
    if first.n != second.n:
        raise RankMismatch(f"Flags in dimensions {first.n} and {second.n}")
    n = first.n
    array = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            span = rank(first.subspace(i) + second.subspace(j), first.field)
            array[i][j] = i + j - span
    return array


def relative_position(first: Flag, second: Flag) -> SphericalPosition:
    """Permutation w with w(j) the first i where V_i meets U_j beyond U_{j-1}.

    Raises:
        DegenerateFlag: Either basis is degenerate
    """
    check_flag(first)
    check_flag(second)
    array = dimension_array(first, second)
    n = first.n
    perm = []
    for j in range(1, n + 1):
        jumps = [i for i in range(1, n + 1) if array[i][j] - array[i][j - 1] == 1]
        perm.append(jumps[0])
    position = SphericalPosition(tuple(perm))
    logger.debug(f"Relative position {position}")
    return position


def same_flag(first: Flag, second: Flag) -> bool:
    return relative_position(first, second).is_identity()


def is_opposite_flags(first: Flag, second: Flag) -> bool:
    """Opposition: relative position equal to the longest element."""
    return relative_position(first, second).is_longest()


def is_transverse(first: Flag, second: Flag) -> bool:
    """All intersections V_i cap U_j have the minimal dimension max(0, i + j - n)."""
    n = first.n
    array = dimension_array(first, second)
    return all(
        array[i][j] == max(0, i + j - n) for i in range(n + 1) for j in range(n + 1)
    )


def adjacent_flag(flag: Flag, i: int, a: Any) -> Flag:
    """Member of the i-panel of F: V_i replaced by V_{i-1} + <v_{i+1} + a v_i>."""
    if not 1 <= i < flag.n:
        raise ValueError(f"Panel index {i} out of range 1..{flag.n - 1}")
    rows = list(flag.rows)
    value = flag.field.convert(a)
    low, high = rows[i - 1], rows[i]
    rows[i - 1] = tuple(h + l.scale(value) for h, l in zip(high, low, strict=True))
    rows[i] = low
    return Flag(tuple(rows), flag.field)


def decode_flag(obj: Any) -> Flag:
    """Flag from {"n", "field", "rows"} (or a bare list of rows).

    Raises:
        ParseError: Malformed document
        DegenerateFlag: The rows are dependent
    """
    if isinstance(obj, list):
        obj = {"rows": obj}
    if not isinstance(obj, dict) or not isinstance(obj.get("rows"), list):
        raise ParseError("A flag document needs a 'rows' array")
    field = field_from_tag(obj["field"]) if "field" in obj else RATIONAL
    rows = obj["rows"]
    if any(not isinstance(row, list) for row in rows):
        raise ParseError("Flag rows must be arrays")
    flag = Flag(tuple(tuple(decode_rational(e, field) for e in row) for row in rows), field)
    return check_flag(flag)
