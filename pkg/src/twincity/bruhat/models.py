"""Data models for double-coset decompositions."""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from twincity.models import DecompositionMode, Place, Sign
from twincity.ring.codec import encode_matrix
from twincity.ring.matrix import LoopMatrix, SeriesMatrix
from twincity.weyl.models import AffinePermutation


class Extremum(Enum):
    """Which end of a column's Z-support the elimination tracks."""

    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class ReductionStrategy:
    """Elimination rules for one decomposition mode.

    Attributes:
        place: Where entries are expanded (0 or infinity)
        extremum: Track the lowest (MIN) or highest (MAX) Z-row per column
        right_sign: Iwahori that the right column operations live in
        left_sign: Iwahori of the left witness
    """

    mode: DecompositionMode
    place: Place
    extremum: Extremum
    right_sign: Sign
    left_sign: Sign

    @classmethod
    def for_mode(cls, mode: DecompositionMode) -> "ReductionStrategy":
        if mode is DecompositionMode.BRUHAT_PLUS:
            return cls(mode, Place.ZERO, Extremum.MIN, Sign.PLUS, Sign.PLUS)
        if mode is DecompositionMode.BRUHAT_MINUS:
            return cls(mode, Place.INFINITY, Extremum.MAX, Sign.MINUS, Sign.MINUS)
        return cls(mode, Place.INFINITY, Extremum.MAX, Sign.PLUS, Sign.MINUS)


@dataclass(frozen=True)
class DecompositionResult:
    """Label of a double coset together with witnesses.

    ``left_witness @ input @ right_witness`` equals the determinant-1
    monomial representative of ``label``; exactly for loop-matrix witnesses,
    on every known coefficient for series witnesses.
    """

    label: AffinePermutation
    left_witness: LoopMatrix | SeriesMatrix
    right_witness: LoopMatrix
    precision_used: int
    mode: DecompositionMode
    steps: int = 0

    @property
    def is_exact(self) -> bool:
        return isinstance(self.left_witness, LoopMatrix)

    def to_dict(self, *, witnesses: bool = True) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "mode": self.mode.value,
            "label": self.label.to_dict(),
            "length": self.label.length,
            "precision_used": self.precision_used,
        }
        if witnesses:
            if isinstance(self.left_witness, LoopMatrix):
                payload["left_witness"] = encode_matrix(self.left_witness)
            else:
                payload["left_witness"] = {
                    "place": self.left_witness.place.value,
                    "truncated": True,
                    "precision": self.left_witness.precision,
                }
            payload["right_witness"] = encode_matrix(self.right_witness)
        return payload
