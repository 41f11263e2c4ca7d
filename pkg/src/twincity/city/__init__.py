"""City domain - components of the twin city and their pseudo-distance."""

from twincity.city.components import (
    chamber_nu,
    component_of,
    cross_codistance,
    is_isometric_translate,
    pseudo_distance,
    same_component,
)
from twincity.city.models import (
    CityMetricValue,
    Component,
    ComponentRegistry,
    RegistryDocument,
    RegistryEntry,
)

__all__ = [
    "Component",
    "CityMetricValue",
    "ComponentRegistry",
    "RegistryDocument",
    "RegistryEntry",
    "same_component",
    "component_of",
    "pseudo_distance",
    "chamber_nu",
    "cross_codistance",
    "is_isometric_translate",
]
