"""Twin City kernel.

Exact computations in affine twin buildings of type A attached to SL_n over
function rings: Weyl distances, codistances, twin-city components and the
building at infinity, plus property suites checking the building axioms.
"""

__version__ = "0.1.0"

from twincity.config import Settings, get_settings
from twincity.errors import TwinCityError
from twincity.models import DecompositionMode, Place, Sign

__all__ = [
    "Settings",
    "get_settings",
    "TwinCityError",
    "Sign",
    "Place",
    "DecompositionMode",
    "__version__",
]
