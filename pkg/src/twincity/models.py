"""Shared enums used across the kernel."""

from enum import Enum


class Sign(Enum):
    """Sign of a chamber, Iwahori subgroup or building half."""

    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @classmethod
    def parse(cls, text: str) -> "Sign":
        """Parse '+', '-', 'plus' or 'minus'."""
        lowered = text.strip().lower()
        if lowered in ("+", "plus", "pos", "positive"):
            return cls.PLUS
        if lowered in ("-", "minus", "neg", "negative"):
            return cls.MINUS
        raise ValueError(f"Unknown sign: {text!r}")


class Place(Enum):
    """Places of the projective line where expansions are taken."""

    ZERO = "0"
    INFINITY = "inf"


class DecompositionMode(Enum):
    """Which double-coset decomposition to compute."""

    BRUHAT_PLUS = "+"
    BRUHAT_MINUS = "-"
    BIRKHOFF = "birkhoff"

    @property
    def sign(self) -> Sign | None:
        if self is DecompositionMode.BRUHAT_PLUS:
            return Sign.PLUS
        if self is DecompositionMode.BRUHAT_MINUS:
            return Sign.MINUS
        return None
