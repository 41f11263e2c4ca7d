"""Domain models for the twin city: components, the component registry and metric values."""

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from twincity.errors import ParseError
from twincity.models import Sign
from twincity.ring.codec import decode_matrix, dumps, encode_matrix
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import INFINITE_GRADE, Grade, format_grade

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Component:
    """A connected component g L^sign of one half of the city.

    ``index`` is the position of the base twist among the registered
    components of the same sign.
    """

    sign: Sign
    base_twist: LoopMatrix
    index: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"sign": self.sign.value, "index": self.index, "base_twist": encode_matrix(self.base_twist)}


@dataclass(frozen=True)
class CityMetricValue:
    """Pseudo-distance d = e^-nu between components, stored by nu (infinite nu means d = 0)."""

    nu: Grade

    @property
    def is_zero(self) -> bool:
        return self.nu == INFINITE_GRADE

    @property
    def value(self) -> float:
        return 0.0 if self.is_zero else math.exp(-self.nu)

    def rendered(self) -> str:
        if self.is_zero:
            return "0"
        if self.nu == 0:
            return "1"
        return f"e^-{int(self.nu)}"

    def to_dict(self) -> dict[str, Any]:
        return {"nu": format_grade(self.nu), "d": self.rendered()}

    def __le__(self, other: "CityMetricValue") -> bool:
        # d is decreasing in nu
        return self.nu >= other.nu

    def __lt__(self, other: "CityMetricValue") -> bool:
        return self.nu > other.nu


class RegistryEntry(BaseModel):
    """Serialized base twist."""

    sign: str = Field(pattern=r"^[+-]$")
    base_twist: dict[str, Any]


class RegistryDocument(BaseModel):
    """On-disk form of a component registry."""

    schema_version: int = 1
    components: list[RegistryEntry] = Field(default_factory=list)


@dataclass
class ComponentRegistry:
    """Finite, explicitly registered set of components per sign.

    Base twists are kept in registration order. Lookups seed an empty sign
    with the identity component, so that component has index 0.
    """

    n: int
    entries: dict[Sign, list[LoopMatrix]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for sign in Sign:
            self.entries.setdefault(sign, [])

    def components(self, sign: Sign) -> list[Component]:
        return [Component(sign, twist, k) for k, twist in enumerate(self.entries[sign])]

    def add(self, sign: Sign, twist: LoopMatrix) -> Component:
        self.entries[sign].append(twist)
        logger.info(f"Registered component {len(self.entries[sign]) - 1} of sign {sign.value}")
        return Component(sign, twist, len(self.entries[sign]) - 1)

    def to_document(self) -> RegistryDocument:
        return RegistryDocument(
            components=[
                RegistryEntry(sign=sign.value, base_twist=encode_matrix(twist))
                for sign in Sign
                for twist in self.entries[sign]
            ]
        )

    def save(self, path: Path | str) -> None:
        Path(path).write_text(dumps(self.to_document().model_dump()) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Path | str, n: int) -> "ComponentRegistry":
        """Read a registry file; a missing file gives an empty registry.

        Raises:
            ParseError: Malformed document
        """
        location = Path(path)
        if not location.exists():
            logger.info(f"No registry at {location}; starting empty")
            return cls(n)
        try:
            document = RegistryDocument.model_validate(json.loads(location.read_text(encoding="utf-8")))
        except (json.JSONDecodeError, ValidationError) as exc:
            raise ParseError(f"{location}: invalid registry ({exc})") from exc
        registry = cls(n)
        for entry in document.components:
            twist = decode_matrix(entry.base_twist)
            if twist.n != n:
                raise ParseError(f"{location}: base twist of size {twist.n} in a registry for n = {n}")
            registry.entries[Sign(entry.sign)].append(twist)
        return registry
