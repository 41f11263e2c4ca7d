"""Command line domain - argument parsing and rendering of results."""

from twincity.cli.main import build_parser, main
from twincity.cli.output import (
    distance_payload,
    document,
    emit,
    emit_error,
    label_payload,
    metric_payload,
    render_dot,
)

__all__ = [
    "build_parser",
    "main",
    "document",
    "emit",
    "emit_error",
    "label_payload",
    "distance_payload",
    "metric_payload",
    "render_dot",
]
