"""Data models for chambers of the twin building."""

from dataclasses import dataclass
from typing import Any

from twincity.models import Sign
from twincity.ring.codec import encode_matrix
from twincity.ring.matrix import LoopMatrix
from twincity.ring.scalars import ScalarField
from twincity.weyl.models import AffinePermutation


@dataclass(frozen=True, eq=False)
class Chamber:
    """Signed coset g B^sign, stored by one representative.

    Two chambers are the same when their Weyl distance is the identity; the
    representative is not a normal form, so chambers are neither compared
    with ``==`` structurally nor hashed. Use
    :func:`twincity.building.distance.same_chamber`.
    """

    sign: Sign
    representative: LoopMatrix

    __hash__ = None  # type: ignore[assignment]

    @property
    def n(self) -> int:
        return self.representative.n

    @property
    def field(self) -> ScalarField:
        return self.representative.field

    def to_dict(self) -> dict[str, Any]:
        return {"sign": self.sign.value, "representative": encode_matrix(self.representative)}

    def __repr__(self) -> str:
        return f"Chamber({self.sign.value}, {self.representative!r})"


@dataclass(frozen=True)
class DistanceValue:
    """Weyl distance between chambers of one sign: a label, or infinite.

    ``label is None`` encodes the infinite distance between chambers in
    different components of the city.
    """

    label: AffinePermutation | None

    @classmethod
    def finite(cls, label: AffinePermutation) -> "DistanceValue":
        return cls(label)

    @classmethod
    def infinite(cls) -> "DistanceValue":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.label is not None

    @property
    def is_identity(self) -> bool:
        return self.label is not None and self.label.is_identity()

    def to_dict(self) -> dict[str, Any]:
        if self.label is None:
            return {"finite": False}
        return {"finite": True, "label": self.label.to_dict(), "length": self.label.length}

    def __str__(self) -> str:
        return "inf" if self.label is None else str(self.label)
