#!/usr/bin/env python3
"""Acceptance run: every property suite at its acceptance sample count.

Exits with non-zero code if any suite reports a violation.

Usage:
    python scripts/run_acceptance.py [--quick] [--output report.json]
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

from twincity.propcheck import GeneratorConfig, SuiteReport, run_suite
from twincity.ring.codec import dumps

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s | %(levelname)-8s | %(message)s",
)
logger = logging.getLogger(__name__)

POOL = ("2", "25", "1/20", "1/3")

# (suite, config overrides); samples are scaled down by --quick
RUNS: list[tuple[str, dict[str, Any]]] = [
    ("wd_axioms", {"field": "F2", "n": 2, "samples": 500}),
    ("wd_axioms", {"field": "F3", "n": 2, "samples": 500}),
    ("wd_axioms", {"field": "F2", "n": 3, "samples": 500}),
    ("wd_axioms", {"field": "F3", "n": 3, "samples": 500}),
    ("twin_axioms", {"field": "Q", "n": 2, "samples": 200, "pole_pool": POOL}),
    ("partition", {"field": "Q", "n": 2, "samples": 200, "pole_pool": POOL}),
    ("oracle", {"field": "F2", "n": 2, "samples": 0}),
    ("witness", {"field": "Q", "n": 2, "samples": 200, "pole_pool": POOL}),
    ("isometry", {"field": "Q", "n": 2, "samples": 200, "pole_pool": POOL}),
    ("city_equivalence", {"field": "Q", "n": 2, "samples": 100, "pole_pool": POOL}),
    ("ultrametric", {"field": "Q", "n": 2, "samples": 200, "pole_pool": POOL}),
    ("counting", {"field": "F2", "n": 2, "ball_radius": 3}),
    (
        "apartment",
        {"field": "Q", "n": 2, "samples": 11, "apartment_radius": 4, "convexity_radius": 3},
    ),
    ("infinity_axioms", {"field": "Q", "n": 3, "samples": 200}),
    ("flip", {"field": "Q", "n": 2, "samples": 100, "pole_pool": POOL}),
]


def run_all(quick: bool, seed: int) -> list[SuiteReport]:
    reports = []
    for suite, overrides in RUNS:
        changes = dict(overrides, seed=seed)
        if quick and changes.get("samples"):
            changes["samples"] = max(2, changes["samples"] // 10)
        cfg = GeneratorConfig().with_overrides(**changes)
        logger.info(f"Running {suite} ({cfg.field_tag}, n={cfg.n}, {cfg.samples} samples)")
        reports.append(run_suite(suite, cfg, timing=True))
    return reports


def print_summary(reports: list[SuiteReport]) -> None:
    table = Table(title="Acceptance summary")
    table.add_column("suite")
    table.add_column("field")
    table.add_column("n", justify="right")
    table.add_column("samples", justify="right")
    table.add_column("violations", justify="right")
    table.add_column("seconds", justify="right")
    for report in reports:
        table.add_row(
            report.suite,
            str(report.config["field"]),
            str(report.config["n"]),
            str(report.samples),
            str(len(report.violations)),
            f"{report.wall_time or 0.0:.1f}",
        )
    Console(stderr=True).print(table)


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the acceptance property suites")
    parser.add_argument("--quick", action="store_true", help="Run a tenth of the samples")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", type=Path, default=None, help="Write the reports as JSON")
    args = parser.parse_args()

    start = time.perf_counter()
    reports = run_all(args.quick, args.seed)
    elapsed = time.perf_counter() - start
    print_summary(reports)

    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        payload = {"reports": [r.to_dict() for r in reports], "wall_time": round(elapsed, 1)}
        args.output.write_text(dumps(payload) + "\n", encoding="utf-8")
        logger.info(f"Saved reports to {args.output}")

    failed = [r.suite for r in reports if not r.passed]
    if failed:
        logger.error(f"Violations in: {', '.join(failed)}")
        return 1
    logger.info(f"All suites passed in {elapsed:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
