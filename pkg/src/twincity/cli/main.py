"""Command line front end.

Every verb prints one JSON document on standard output (``ball --dot``
prints a DOT graph instead). Exit codes: 0 success, 1 mathematical or
input error (reported as ``{"schema": 1, "error": code, "detail": ...}``),
2 usage error.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from twincity.bruhat.decompose import decompose
from twincity.building.apartment import bn_flip
from twincity.building.distance import codelta, delta, is_opposite, standard_chamber
from twincity.building.models import Chamber
from twincity.building.panels import chamber_ball, gallery
from twincity.city.components import component_of, pseudo_distance
from twincity.city.models import Component, ComponentRegistry
from twincity.cli import output
from twincity.errors import InputError, InternalError, TwinCityError
from twincity.infinity.flags import decode_flag, is_opposite_flags, relative_position
from twincity.infinity.sectors import sector_to_flag
from twincity.main import setup_logging
from twincity.models import DecompositionMode, Sign
from twincity.propcheck.models import GeneratorConfig
from twincity.propcheck.suites import SUITES, run_suite
from twincity.ring.codec import encode_matrix, load_json, parse_matrix
from twincity.ring.scalars import field_from_tag
from twincity.weyl.affine import simple_reflection

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
Handler = Callable[[argparse.Namespace], int]


def _sign(text: str) -> Sign:
    try:
        return Sign.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid sign {text!r} (use + or -)") from exc


def _direction(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid direction {text!r}") from exc
    if sorted(values) != list(range(1, len(values) + 1)):
        raise argparse.ArgumentTypeError(f"direction {text!r} is not a permutation")
    return values


def _chamber(path: Path, sign: Sign) -> Chamber:
    return Chamber(sign, parse_matrix(path))


# -- verbs --------------------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    g = parse_matrix(args.matrix)
    result = decompose(g, DecompositionMode(args.mode), exact=args.exact)
    output.emit({"decomposition": result.to_dict(witnesses=not args.no_witnesses)})
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    c, d = _chamber(args.first, args.sign), _chamber(args.second, args.sign)
    output.emit(output.distance_payload(delta(c, d)))
    return 0


def cmd_codist(args: argparse.Namespace) -> int:
    x = _chamber(args.first, args.sign)
    y = _chamber(args.second, args.sign.opposite)
    output.emit({"codistance": output.label_payload(codelta(x, y))})
    return 0


def cmd_opposite(args: argparse.Namespace) -> int:
    x = _chamber(args.first, args.sign)
    y = _chamber(args.second, args.sign.opposite)
    output.emit({"opposite": is_opposite(x, y)})
    return 0


def cmd_gallery(args: argparse.Namespace) -> int:
    c, d = _chamber(args.first, args.sign), _chamber(args.second, args.sign)
    chambers = gallery(c, d)
    reflections = {simple_reflection(c.n, s): s for s in range(c.n)}
    types = []
    for previous, current in zip(chambers, chambers[1:], strict=False):
        label = delta(previous, current).label
        assert label is not None
        types.append(reflections[label])
    output.emit(
        {
            "gallery": [encode_matrix(chamber.representative) for chamber in chambers],
            "types": types,
            "length": len(types),
        }
    )
    return 0


def cmd_ball(args: argparse.Namespace) -> int:
    if args.matrix is not None:
        center = _chamber(args.matrix, args.sign)
    else:
        center = standard_chamber(args.n, args.sign, field_from_tag(args.field))
    ball = chamber_ball(center, args.radius)
    if args.format == "table":
        output.print_table(output.counts_table(ball))
    if args.dot:
        print(output.render_dot(ball))
        return 0
    counts = sorted(ball.counts().items(), key=lambda item: (item[0].length, item[0].window))
    output.emit(
        {
            "ball": {
                "radius": args.radius,
                "center": center.to_dict(),
                "total": len(ball.chambers),
                "counts": [
                    {"label": list(w.window), "length": w.length, "chambers": count}
                    for w, count in counts
                ],
            }
        }
    )
    return 0


def cmd_component(args: argparse.Namespace) -> int:
    chamber = _chamber(args.matrix, args.sign)
    registry = ComponentRegistry.load(args.registry, chamber.n)
    known = len(registry.components(args.sign))
    component = component_of(chamber, registry)
    registered = component.index >= known and component.index > 0
    if registered and args.update:
        registry.save(args.registry)
        logger.info(f"Registered component {component.index} in {args.registry}")
    output.emit({"component": component.to_dict(), "new": registered})
    return 0


def cmd_citydist(args: argparse.Namespace) -> int:
    first = Component(args.sign, parse_matrix(args.a))
    second = Component(args.sign, parse_matrix(args.b))
    output.emit({"citydist": output.metric_payload(pseudo_distance(first, second))})
    return 0


def cmd_infinity_relpos(args: argparse.Namespace) -> int:
    first, second = decode_flag(load_json(args.first)), decode_flag(load_json(args.second))
    position = relative_position(first, second)
    output.emit({"relpos": position.to_dict(), "opposite": is_opposite_flags(first, second)})
    return 0


def cmd_infinity_sector(args: argparse.Namespace) -> int:
    g = parse_matrix(args.matrix)
    if len(args.direction) != g.n:
        raise InputError(f"Direction has {len(args.direction)} entries for a {g.n} x {g.n} matrix")
    output.emit({"flag": sector_to_flag(g, args.direction).to_dict()})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        field=args.field,
        n=args.n,
        samples=args.samples,
        pole_pool=tuple(args.pool.split(",")) if args.pool else (),
    )
    report = run_suite(args.suite, cfg, workers=args.workers, timing=args.timing)
    output.emit({"report": report.to_dict()})
    return 0 if report.passed else 1


def cmd_flip(args: argparse.Namespace) -> int:
    flipped = bn_flip(_chamber(args.matrix, args.sign))
    output.emit({"chamber": flipped.to_dict()})
    return 0


# -- parser -------------------------------------------------------------------


def _pair(parser: argparse.ArgumentParser, sign_help: str) -> None:
    parser.add_argument("first", type=Path, help="Matrix file of the first chamber")
    parser.add_argument("second", type=Path, help="Matrix file of the second chamber")
    parser.add_argument("--sign", type=_sign, default=Sign.PLUS, help=sign_help)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twincity", description="Twin city kernel for SL_n")
    parser.add_argument("--log-level", default=None, help="Override the configured log level")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("decompose", help="Bruhat or Birkhoff label with witnesses")
    p.add_argument("--matrix", type=Path, required=True)
    p.add_argument(
        "--mode", "--sign", dest="mode", choices=[m.value for m in DecompositionMode], default="+"
    )
    p.add_argument("--exact", action="store_true", help="Exact rational witnesses")
    p.add_argument("--no-witnesses", action="store_true")
    p.set_defaults(handler=cmd_decompose)

    p = verbs.add_parser("dist", help="Weyl distance between chambers of one sign")
    _pair(p, "Sign of both chambers")
    p.set_defaults(handler=cmd_dist)

    p = verbs.add_parser("codist", help="Codistance between chambers of opposite signs")
    _pair(p, "Sign of the first chamber")
    p.set_defaults(handler=cmd_codist)

    p = verbs.add_parser("opposite", help="Whether two chambers are opposite")
    _pair(p, "Sign of the first chamber")
    p.set_defaults(handler=cmd_opposite)

    p = verbs.add_parser("gallery", help="Minimal gallery between chambers of one sign")
    _pair(p, "Sign of both chambers")
    p.set_defaults(handler=cmd_gallery)

    p = verbs.add_parser("ball", help="Chambers within a radius (finite fields)")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--matrix", type=Path, default=None, help="Center (standard chamber if omitted)")
    p.add_argument("--sign", type=_sign, default=Sign.PLUS)
    p.add_argument("--field", default="F2")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--dot", action="store_true", help="Print a DOT graph")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(handler=cmd_ball)

    p = verbs.add_parser("component", help="Registered component of a chamber")
    p.add_argument("--registry", type=Path, required=True)
    p.add_argument("--matrix", type=Path, required=True)
    p.add_argument("--sign", type=_sign, default=Sign.PLUS)
    p.add_argument("--update", action="store_true", help="Save new components to the registry")
    p.set_defaults(handler=cmd_component)

    p = verbs.add_parser("citydist", help="Pseudo-distance between components")
    p.add_argument("--a", type=Path, required=True, help="Base twist of the first component")
    p.add_argument("--b", type=Path, required=True, help="Base twist of the second component")
    p.add_argument("--sign", type=_sign, default=Sign.PLUS)
    p.set_defaults(handler=cmd_citydist)

    p = verbs.add_parser("infinity", help="Building at infinity")
    inner = p.add_subparsers(dest="action", required=True)
    q = inner.add_parser("relpos", help="Relative position of two flags")
    q.add_argument("first", type=Path)
    q.add_argument("second", type=Path)
    q.set_defaults(handler=cmd_infinity_relpos)
    q = inner.add_parser("sector", help="Flag at infinity of a sector")
    q.add_argument("--matrix", type=Path, required=True)
    q.add_argument("--direction", type=_direction, required=True)
    q.set_defaults(handler=cmd_infinity_sector)

    p = verbs.add_parser("check", help="Run a property suite")
    p.add_argument("--suite", choices=list(SUITES), required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", default="F2")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--pool", default="", help="Comma separated pole pool, e.g. 2,25,1/20")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="Add the wall time to the report")
    p.set_defaults(handler=cmd_check)

    p = verbs.add_parser("flip", help="BN-flip of a chamber")
    p.add_argument("--matrix", type=Path, required=True)
    p.add_argument("--sign", type=_sign, default=Sign.PLUS)
    p.set_defaults(handler=cmd_flip)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    handler: Handler = args.handler
    try:
        return handler(args)
    except ValidationError as exc:
        output.emit({"error": InputError.code, "detail": str(exc)})
        return USAGE_ERROR
    except InternalError as exc:
        logger.error(f"{args.verb} failed: {exc.code}: {exc.detail}")
        output.emit_error(exc)
        return 1
    except TwinCityError as exc:
        logger.debug(f"{args.verb} failed: {exc.code}")
        output.emit_error(exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
