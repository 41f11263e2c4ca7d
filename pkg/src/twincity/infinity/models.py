"""Data models for the spherical building at infinity."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from twincity.errors import DegenerateFlag
from twincity.ring.codec import encode_rational
from twincity.ring.rational import RationalFunction, as_rational
from twincity.ring.scalars import ScalarField

Vector = tuple[RationalFunction, ...]


@dataclass(frozen=True, eq=False)
class Flag:
    """Complete flag V_1 < ... < V_{n-1} in Q(t)^n.

    ``rows`` is a basis v_1, ..., v_n adapted to the flag: V_i is spanned by
    the first i rows. Bases are not normalized; two flags are equal when
    their relative position is the identity.
    """

    rows: tuple[Vector, ...]
    field: ScalarField

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n < 2 or any(len(row) != n for row in self.rows):
            raise DegenerateFlag(f"A flag basis needs n >= 2 rows of length n, got {n} rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: ScalarField) -> "Flag":
        return cls(tuple(tuple(as_rational(v, field) for v in row) for row in rows), field)

    @property
    def n(self) -> int:
        return len(self.rows)

    def subspace(self, i: int) -> tuple[Vector, ...]:
        """Basis of V_i."""
        return self.rows[:i]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "field": self.field.tag,
            "rows": [[encode_rational(e) for e in row] for row in self.rows],
        }


@dataclass(frozen=True)
class SphericalPosition:
    """Relative position of two flags: a permutation in S_n, images of 1..n."""

    perm: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "SphericalPosition":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "SphericalPosition":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def is_longest(self) -> bool:
        return self.perm == tuple(range(self.n, 0, -1))

    def inverse(self) -> "SphericalPosition":
        values = [0] * self.n
        for j, image in enumerate(self.perm, start=1):
            values[image - 1] = j
        return SphericalPosition(tuple(values))

    def __mul__(self, other: "SphericalPosition") -> "SphericalPosition":
        return SphericalPosition(tuple(self.perm[other.perm[j] - 1] for j in range(self.n)))

    @property
    def length(self) -> int:
        """Number of inversions."""
        return sum(
            1 for a in range(self.n) for b in range(a + 1, self.n) if self.perm[a] > self.perm[b]
        )

    def to_dict(self) -> dict[str, Any]:
        return {"perm": list(self.perm), "length": self.length}

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.perm) + "]"
