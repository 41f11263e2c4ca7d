"""Panels, galleries and balls of chambers.

The s-panel through g B^sign consists of g B^sign itself and the chambers
g x_s(a) s B^sign, where x_s(a) runs over the simple root subgroup of type
s inside the Iwahori of that sign.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Any

from twincity.bruhat.decompose import exact_bruhat
from twincity.bruhat.iwahori import root_element, simple_representative
from twincity.building.distance import delta, relative_matrix, same_chamber
from twincity.building.models import Chamber
from twincity.errors import DifferentComponents, InputError
from twincity.ring.matrix import LoopMatrix
from twincity.weyl.affine import reduced_word, simple_reflection
from twincity.weyl.models import AffinePermutation

logger = logging.getLogger(__name__)


def _check_type(n: int, s: int) -> None:
    if not 0 <= s < n:
        raise InputError(f"Simple reflection index {s} out of range 0..{n - 1}")


def _rational_parameters() -> Iterator[Fraction]:
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


@dataclass(frozen=True)
class Panel:
    """The s-panel through a chamber."""

    chamber: Chamber
    s: int

    def __post_init__(self) -> None:
        _check_type(self.chamber.n, self.s)

    def member(self, a: Any) -> Chamber:
        """The chamber g x_s(a) s; every panel member other than g itself has this form."""
        c = self.chamber
        x = root_element(c.n, c.sign, self.s, a, c.field)
        dot = simple_representative(c.n, self.s, c.field)
        return Chamber(c.sign, c.representative @ x @ dot)

    @property
    def reflected(self) -> Chamber:
        """The chamber g s."""
        c = self.chamber
        return Chamber(c.sign, c.representative @ simple_representative(c.n, self.s, c.field))

    def parameters(self) -> Iterator[Any]:
        if self.chamber.field.is_finite:
            return iter(self.chamber.field.elements())
        return _rational_parameters()

    def __iter__(self) -> Iterator[Chamber]:
        yield self.chamber
        for a in self.parameters():
            yield self.member(a)


def panel_neighbors(chamber: Chamber, s: int) -> list[Chamber] | Iterator[Chamber]:
    """Members of the s-panel through ``chamber``, the chamber itself first.

    Over F_p this is the full list of p + 1 chambers; over Q it is an
    infinite generator running through the parameters 0, 1, -1, 2, ...
    """
    panel = Panel(chamber, s)
    if chamber.field.is_finite:
        return list(panel)
    return iter(panel)


def _bruhat_frame(c: Chamber, d: Chamber) -> tuple[AffinePermutation, LoopMatrix]:
    """Label w of delta(c, d) and g with c = g B, d = g w B."""
    h = relative_matrix(c, d)
    distance = delta(c, d)
    if distance.label is None:
        raise DifferentComponents("The chambers lie in different components")
    result = exact_bruhat(h, c.sign)
    left = result.left_witness
    assert isinstance(left, LoopMatrix)
    return result.label, c.representative @ left.inverse()


def gallery(c: Chamber, d: Chamber) -> list[Chamber]:
    """Minimal gallery from ``c`` to ``d`` following the reduced word of delta(c, d).

    Raises:
        DifferentComponents: The distance is infinite
    """
    label, base = _bruhat_frame(c, d)
    if label.is_identity():
        return [c]
    word = reduced_word(label)
    chambers = [c]
    current = base
    for s in word[:-1]:
        current = current @ simple_representative(c.n, s, c.field)
        chambers.append(Chamber(c.sign, current))
    chambers.append(d)
    logger.debug(f"Gallery of type {word} between chambers at distance {label}")
    return chambers


def exchange_neighbor(c: Chamber, d: Chamber, s: int) -> Chamber:
    """A chamber c' with delta(c', c) = s and delta(c', d) = s w, where w = delta(c, d).

    Raises:
        DifferentComponents: The distance is infinite
    """
    _check_type(c.n, s)
    label, base = _bruhat_frame(c, d)
    dot = simple_representative(c.n, s, c.field)
    if (simple_reflection(c.n, s) * label).length < label.length:
        return Chamber(c.sign, base @ dot)
    return Chamber(c.sign, c.representative @ dot)


@dataclass
class ChamberBall:
    """Chambers within a Weyl-length radius of a center, with panel adjacencies.

    ``labels[k]`` is the distance from the center to ``chambers[k]``;
    ``edges`` holds (k, l, s) for chambers k, l sharing an s-panel.
    """

    center: Chamber
    radius: int
    chambers: list[Chamber] = field(default_factory=list)
    labels: list[AffinePermutation] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def counts(self) -> dict[AffinePermutation, int]:
        tally: dict[AffinePermutation, int] = {}
        for label in self.labels:
            tally[label] = tally.get(label, 0) + 1
        return tally

    def _index_of(self, chamber: Chamber, label: AffinePermutation) -> int | None:
        for k, existing in enumerate(self.chambers):
            if self.labels[k] == label and same_chamber(existing, chamber):
                return k
        return None


def chamber_ball(center: Chamber, radius: int) -> ChamberBall:
    """All chambers D with delta(center, D) of length <= radius (finite fields only).

    Raises:
        InputError: The field is infinite
    """
    if not center.field.is_finite:
        raise InputError("Balls can only be enumerated over a finite field")
    ball = ChamberBall(center, radius, [center], [AffinePermutation.identity(center.n)])
    frontier = [0]
    for layer in range(radius):
        next_frontier: list[int] = []
        for k in frontier:
            for s in range(center.n):
                members = panel_neighbors(ball.chambers[k], s)
                for candidate in list(members)[1:]:
                    label = delta(center, candidate).label
                    assert label is not None
                    if label.length != layer + 1:
                        continue
                    index = ball._index_of(candidate, label)
                    if index is None:
                        index = len(ball.chambers)
                        ball.chambers.append(candidate)
                        ball.labels.append(label)
                        next_frontier.append(index)
                    ball.edges.append((k, index, s))
        frontier = next_frontier
        logger.debug(f"Ball layer {layer + 1}: {len(frontier)} chambers")
    return ball
