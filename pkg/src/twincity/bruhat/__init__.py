"""Bruhat domain - Bruhat and Birkhoff decompositions with witnesses."""

from twincity.bruhat.decompose import (
    birkhoff,
    decompose,
    exact_bruhat,
    formal_bruhat,
    rational_bruhat,
)
from twincity.bruhat.iwahori import (
    in_iwahori,
    iwahori_generators,
    root_element,
    simple_representative,
)
from twincity.bruhat.models import DecompositionResult, Extremum, ReductionStrategy
from twincity.bruhat.reduction import ColumnReducer

__all__ = [
    "DecompositionResult",
    "ReductionStrategy",
    "Extremum",
    "ColumnReducer",
    "formal_bruhat",
    "rational_bruhat",
    "exact_bruhat",
    "birkhoff",
    "decompose",
    "in_iwahori",
    "root_element",
    "simple_representative",
    "iwahori_generators",
]
