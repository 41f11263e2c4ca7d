"""Rendering of command results: JSON documents, DOT graphs and rich tables."""

import sys
from typing import Any, TextIO

import mpmath
from rich.console import Console
from rich.table import Table

from twincity.building.models import DistanceValue
from twincity.building.panels import ChamberBall
from twincity.city.models import CityMetricValue
from twincity.config import get_settings
from twincity.errors import TwinCityError
from twincity.ring.codec import dumps
from twincity.weyl.models import AffinePermutation


def document(payload: dict[str, Any]) -> str:
    """Versioned JSON document for standard output."""
    return dumps({"schema": get_settings().schema_version, **payload})


def emit(payload: dict[str, Any], stream: TextIO | None = None) -> None:
    print(document(payload), file=stream or sys.stdout)


def emit_error(exc: TwinCityError, stream: TextIO | None = None) -> None:
    emit(exc.to_dict(), stream)


def label_payload(label: AffinePermutation) -> dict[str, Any]:
    return {"label": list(label.window), "length": label.length}


def distance_payload(distance: DistanceValue) -> dict[str, Any]:
    """``{"distance": {"finite": window}, "length": l}`` or ``{"distance": "infinite"}``."""
    if distance.label is None:
        return {"distance": "infinite"}
    return {"distance": {"finite": list(distance.label.window)}, "length": distance.label.length}


def metric_payload(value: CityMetricValue) -> dict[str, Any]:
    payload = value.to_dict()
    # advisory decimal rendering of e^-nu
    payload["d_approx"] = "0" if value.is_zero else mpmath.nstr(mpmath.exp(-int(value.nu)), 15)
    return payload


def render_dot(ball: ChamberBall) -> str:
    """Graphviz rendering of a ball; nodes carry their distance label, edges their panel type."""
    lines = ["graph ball {", "  node [shape=box];"]
    for k, label in enumerate(ball.labels):
        lines.append(f'  c{k} [label="{label}"];')
    for k, l, s in ball.edges:
        lines.append(f'  c{k} -- c{l} [label="s{s}"];')
    lines.append("}")
    return "\n".join(lines)


def counts_table(ball: ChamberBall) -> Table:
    table = Table(title=f"Chambers within radius {ball.radius}")
    table.add_column("label")
    table.add_column("length", justify="right")
    table.add_column("chambers", justify="right")
    for label, count in sorted(ball.counts().items(), key=lambda item: (item[0].length, item[0].window)):
        table.add_row(str(label), str(label.length), str(count))
    return table


def print_table(table: Table) -> None:
    """Tables go to stderr; stdout stays reserved for the JSON result."""
    Console(stderr=True).print(table)
