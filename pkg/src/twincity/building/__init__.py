"""Building domain - chambers of the twin building and their distances."""

from twincity.building.apartment import TwinApartment, bn_flip, twin_apartment
from twincity.building.distance import (
    codelta,
    delta,
    is_opposite,
    relative_matrix,
    same_chamber,
    standard_chamber,
    translate,
)
from twincity.building.models import Chamber, DistanceValue
from twincity.building.panels import (
    ChamberBall,
    Panel,
    chamber_ball,
    exchange_neighbor,
    gallery,
    panel_neighbors,
)

__all__ = [
    "Chamber",
    "DistanceValue",
    "standard_chamber",
    "translate",
    "relative_matrix",
    "delta",
    "codelta",
    "is_opposite",
    "same_chamber",
    "Panel",
    "panel_neighbors",
    "gallery",
    "exchange_neighbor",
    "ChamberBall",
    "chamber_ball",
    "TwinApartment",
    "twin_apartment",
    "bn_flip",
]
