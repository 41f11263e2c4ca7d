"""Property-check domain - seeded generators, brute-force oracles and axiom suites."""

from twincity.propcheck.generators import (
    derive_rng,
    random_flag,
    random_iwahori,
    random_laurent,
    random_loop_matrix,
    random_rational_iwahori,
    random_scalar,
    random_weyl,
    try_regularity,
)
from twincity.propcheck.models import GeneratorConfig, SuiteReport, Violation
from twincity.propcheck.oracles import (
    chamber_counts,
    iwahori_sides,
    oracle_bruhat_bfs,
    small_matrices,
)
from twincity.propcheck.suites import SUITES, SampleContext, SuiteSpec, run_suite

__all__ = [
    "GeneratorConfig",
    "Violation",
    "SuiteReport",
    "SampleContext",
    "SuiteSpec",
    "SUITES",
    "run_suite",
    "derive_rng",
    "random_scalar",
    "random_laurent",
    "random_loop_matrix",
    "random_iwahori",
    "random_rational_iwahori",
    "random_weyl",
    "random_flag",
    "try_regularity",
    "oracle_bruhat_bfs",
    "small_matrices",
    "chamber_counts",
    "iwahori_sides",
]
