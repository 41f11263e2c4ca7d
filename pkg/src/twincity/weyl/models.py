"""Data models for the affine Weyl group of type A."""

from dataclasses import dataclass
from typing import Any

from twincity.errors import InvalidWindow, RankMismatch


@dataclass(frozen=True)
class AffinePermutation:
    """Affine permutation in window notation [w(1), ..., w(n)].

    The window determines a bijection of Z with w(i + n) = w(i) + n whose
    residues mod n are a permutation and whose window sums to 1 + ... + n.
    Composition is (u * v)(i) = u(v(i)).
    """

    n: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidWindow(f"Rank parameter must be >= 2, got {self.n}")
        if len(self.window) != self.n:
            raise InvalidWindow(f"Window {list(self.window)} has length != {self.n}")
        if sorted(v % self.n for v in self.window) != list(range(self.n)):
            raise InvalidWindow(f"Residues of {list(self.window)} are not a permutation mod {self.n}")
        if sum(self.window) != self.n * (self.n + 1) // 2:
            raise InvalidWindow(f"Window {list(self.window)} is not sum-normalized")

    @classmethod
    def identity(cls, n: int) -> "AffinePermutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def of(cls, *window: int) -> "AffinePermutation":
        """Shorthand: AffinePermutation.of(3, 0)."""
        return cls(len(window), tuple(window))

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if other.n != self.n:
            raise RankMismatch(f"Cannot compose ranks {self.n} and {other.n}")
        return AffinePermutation(self.n, tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "AffinePermutation":
        values = [0] * self.n
        for i, value in enumerate(self.window, start=1):
            q, r = divmod(value - 1, self.n)
            values[r] = i - q * self.n
        return AffinePermutation(self.n, tuple(values))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    @property
    def length(self) -> int:
        """Number of affine inversions."""
        total = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                total += abs((self.window[j] - self.window[i]) // self.n)
        return total

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AffinePermutation":
        window = tuple(int(v) for v in data["window"])
        return cls(int(data.get("n", len(window))), window)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"


@dataclass(frozen=True)
class MonomialMatrix:
    """Monomial matrix: column j is coefficients[j] * t^exponents[j] * e_{perm[j]}.

    ``perm`` holds 1-based row indices.
    """

    perm: tuple[int, ...]
    exponents: tuple[int, ...]
    coefficients: tuple[Any, ...]

    @property
    def n(self) -> int:
        return len(self.perm)
