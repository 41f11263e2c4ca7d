"""Domain models for the property-check harness."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from twincity.errors import EmptyPool, PoleOnCircle
from twincity.ring.models import RegularityClass
from twincity.ring.scalars import ScalarField, field_from_tag


class GeneratorConfig(BaseModel):
    """Seeded sampling parameters shared by all suites.

    Identical configs reproduce identical sample streams regardless of the
    number of worker threads. Pole pools only apply over Q; over F_p every
    sampled matrix is a Laurent polynomial matrix.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    seed: int = Field(default=0, ge=0, lt=2**64)
    field_tag: str = Field(default="F2", alias="field")
    n: int = Field(default=2, ge=2, le=6)
    degree_low: int = -1
    degree_high: int = 1
    pole_pool: tuple[str, ...] = ()
    samples: int = Field(default=100, ge=0)
    word_length: int = Field(default=4, ge=1)
    apartment_radius: int = Field(default=2, ge=0)
    convexity_radius: int = Field(default=2, ge=0)
    ball_radius: int = Field(default=3, ge=0)

    @field_validator("field_tag")
    @classmethod
    def _known_field(cls, value: str) -> str:
        field_from_tag(value)
        return value

    @field_validator("pole_pool")
    @classmethod
    def _poles_off_circle(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        for text in value:
            root = Fraction(text)
            if root == 0:
                raise ValueError("Poles must be nonzero")
            if abs(root) == 1:
                raise PoleOnCircle(f"Pool pole {text} lies on the unit circle")
        return value

    @model_validator(mode="after")
    def _degree_window(self) -> "GeneratorConfig":
        if self.degree_low > self.degree_high:
            raise ValueError(f"Empty degree window [{self.degree_low}, {self.degree_high}]")
        return self

    @cached_property
    def scalar_field(self) -> ScalarField:
        return field_from_tag(self.field_tag)

    def poles(self, regularity: RegularityClass | None = None) -> list[Fraction]:
        """Pool poles compatible with a requested regularity class.

        Raises:
            EmptyPool: A pole-carrying class was requested but no pool pole fits it
        """
        if self.scalar_field.is_finite:
            if regularity not in (None, RegularityClass.ALGEBRAIC):
                raise EmptyPool(f"No poles over {self.scalar_field.tag}")
            return []
        pool = [Fraction(text) for text in self.pole_pool]
        if regularity is None:
            return pool
        if regularity is RegularityClass.ALGEBRAIC:
            return []
        outside = [c for c in pool if abs(c) > 1]
        inside = [c for c in pool if abs(c) < 1]
        if regularity is RegularityClass.PLUS_ONLY:
            selected = outside
        elif regularity is RegularityClass.MINUS_ONLY:
            selected = inside
        else:
            selected = outside + inside if outside and inside else []
        if not selected:
            raise EmptyPool(f"Pole pool {list(self.pole_pool)} has no poles for {regularity.value}")
        return selected

    def with_overrides(self, **changes: Any) -> "GeneratorConfig":
        data = self.model_dump(by_alias=True)
        data.update(changes)
        return GeneratorConfig.model_validate(data)

    def replay(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True, mode="json")


@dataclass
class Violation:
    """One failed property instance, with everything needed to replay it."""

    suite: str
    index: int
    property: str
    detail: str
    inputs: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "property": self.property,
            "detail": self.detail,
            "inputs": self.inputs,
        }


@dataclass
class SuiteReport:
    """Outcome of one suite run; an order-independent fold over the samples."""

    suite: str
    samples: int
    config: dict[str, Any]
    violations: list[Violation] = field(default_factory=list)
    wall_time: float | None = None
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "suite": self.suite,
            "samples": self.samples,
            "passed": self.passed,
            "config": self.config,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.summary:
            payload["summary"] = self.summary
        if self.wall_time is not None:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload
