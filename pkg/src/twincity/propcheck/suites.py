"""Property suites over seeded samples.

Each suite checks one family of axioms on independent samples. Samples run
on a thread pool; every sample derives its own random generator, and the
report folds the sample results in index order, so reports only depend on
the config.
"""

import logging
import random
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import islice
from typing import Any

from twincity.bruhat.decompose import birkhoff, decompose, rational_bruhat
from twincity.bruhat.iwahori import in_iwahori, root_element, simple_representative
from twincity.building.apartment import bn_flip, twin_apartment
from twincity.building.distance import (
    codelta,
    delta,
    is_opposite,
    same_chamber,
    standard_chamber,
    translate,
)
from twincity.building.models import Chamber
from twincity.building.panels import Panel, exchange_neighbor, gallery, panel_neighbors
from twincity.city.components import (
    component_of,
    cross_codistance,
    is_isometric_translate,
    pseudo_distance,
    same_component,
)
from twincity.city.models import Component, ComponentRegistry
from twincity.config import get_settings
from twincity.errors import InputError, NotOpposite, TwinCityError
from twincity.infinity.flags import (
    adjacent_flag,
    apply,
    flag_from_matrix,
    is_opposite_flags,
    is_transverse,
    relative_position,
    same_flag,
)
from twincity.infinity.models import Flag, SphericalPosition
from twincity.infinity.sectors import boundary_pair_check, sector_ray, sector_to_flag
from twincity.models import DecompositionMode, Place, Sign
from twincity.propcheck.generators import (
    derive_rng,
    random_flag,
    random_iwahori,
    random_loop_matrix,
    random_rational_iwahori,
    random_scalar,
    try_regularity,
)
from twincity.propcheck.models import GeneratorConfig, SuiteReport, Violation
from twincity.propcheck.oracles import (
    chamber_counts,
    iwahori_sides,
    oracle_bruhat_bfs,
    small_matrices,
)
from twincity.ring.codec import encode_matrix
from twincity.ring.matrix import LoopMatrix
from twincity.ring.models import INFINITE_GRADE, RegularityClass, format_grade
from twincity.ring.rational import RationalFunction
from twincity.ring.regularity import regularity_class
from twincity.ring.scalars import field_from_tag
from twincity.weyl.affine import elements_up_to_length, simple_reflection
from twincity.weyl.models import AffinePermutation
from twincity.weyl.monomial import weyl_to_monomial

logger = logging.getLogger(__name__)

REGULARITY_CYCLE = (
    RegularityClass.ALGEBRAIC,
    RegularityClass.PLUS_ONLY,
    RegularityClass.MINUS_ONLY,
    RegularityClass.NEITHER,
)

ANCHOR_GRADES = {Fraction(2): 0, Fraction(25): 3, Fraction(1, 20): 2, Fraction(1, 3): 1}


def _encode(value: Any) -> Any:
    if isinstance(value, LoopMatrix):
        return encode_matrix(value)
    if isinstance(value, Chamber | Flag | Component | AffinePermutation | SphericalPosition):
        return value.to_dict()
    return value


@dataclass
class SampleContext:
    """Per-sample state handed to a suite check."""

    suite: str
    index: int
    cfg: GeneratorConfig
    rng: random.Random
    violations: list[Violation] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def sign(self) -> Sign:
        """Alternates between samples so both halves get exercised."""
        return Sign.PLUS if self.index % 2 == 0 else Sign.MINUS

    @property
    def regularity(self) -> RegularityClass:
        return try_regularity(self.cfg, REGULARITY_CYCLE[self.index % len(REGULARITY_CYCLE)])

    def regular_for(self, sign: Sign) -> RegularityClass:
        """A pool-supported class inside the standard subgroup of ``sign``."""
        wanted = RegularityClass.PLUS_ONLY if sign is Sign.PLUS else RegularityClass.MINUS_ONLY
        if self.index % 3 == 0:
            return RegularityClass.ALGEBRAIC
        return try_regularity(self.cfg, wanted)

    def check(self, condition: bool, prop: str, detail: str = "", **inputs: Any) -> bool:
        if not condition:
            self.violations.append(
                Violation(
                    suite=self.suite,
                    index=self.index,
                    property=prop,
                    detail=detail,
                    inputs={key: _encode(value) for key, value in inputs.items()},
                )
            )
        return condition


SuiteCheck = Callable[[SampleContext], None]


@dataclass(frozen=True)
class SuiteSpec:
    """A named suite: its per-sample check and how many samples it runs."""

    name: str
    check: SuiteCheck
    description: str
    population: Callable[[GeneratorConfig], int] | None = None

    def sample_count(self, cfg: GeneratorConfig) -> int:
        if self.population is None:
            return cfg.samples
        size = self.population(cfg)
        return size if cfg.samples == 0 else min(size, cfg.samples)


# -- building axioms ----------------------------------------------------------


def _panel_members(panel: Panel, limit: int) -> list[Chamber]:
    """Panel members other than the base chamber (all of them over F_p)."""
    if panel.chamber.field.is_finite:
        return list(panel)[1:]
    return [panel.member(a) for a in islice(panel.parameters(), limit)]


def check_wd_axioms(ctx: SampleContext) -> None:
    cfg, rng, sign = ctx.cfg, ctx.rng, ctx.sign
    n = cfg.n
    c = Chamber(sign, random_loop_matrix(cfg, rng, ctx.regularity))
    d = Chamber(sign, c.representative @ random_loop_matrix(cfg, rng, ctx.regular_for(sign)))
    distance = delta(c, d)
    if not ctx.check(distance.is_finite, "same_component_finite", "delta infinite", c=c, d=d):
        return
    w = distance.label
    assert w is not None
    ctx.check(delta(c, c).is_identity, "wd1_reflexive", c=c)
    b = random_iwahori(cfg, rng, sign)
    ctx.check(delta(c, _right_translate(c, b)).is_identity, "wd1_coset", c=c, b=b)
    ctx.check(delta(c, _right_translate(d, b)).label == w, "well_defined", c=c, d=d, b=b)
    ctx.check(delta(d, c).label == w.inverse(), "inverse", c=c, d=d, w=w)

    s = rng.randrange(n)
    sw = simple_reflection(n, s) * w
    first = Panel(c, s).member(random_scalar(c.field, rng))
    ctx.check(delta(first, c).label == simple_reflection(n, s), "panel_distance", c=c, s=s)
    moved = delta(first, d).label
    ctx.check(moved in (sw, w), "wd2_options", f"got {moved}", c=c, d=d, s=s, w=w)
    if sw.length == w.length + 1:
        ctx.check(moved == sw, "wd2_lengthening", f"got {moved}", c=c, d=d, s=s, w=w)
    exchanged = exchange_neighbor(c, d, s)
    ctx.check(delta(exchanged, c).label == simple_reflection(n, s), "wd3_adjacent", c=c, d=d, s=s)
    ctx.check(delta(exchanged, d).label == sw, "wd3_distance", c=c, d=d, s=s, w=w)

    if c.field.is_finite:
        members = panel_neighbors(c, s)
        assert isinstance(members, list)
        ctx.check(len(members) == c.field.p + 1, "panel_size", c=c, s=s)
        for k, a in enumerate(members):
            for b_member in members[k + 1 :]:
                ctx.check(
                    delta(a, b_member).label == simple_reflection(n, s), "panel_pairwise", c=c, s=s
                )


def _right_translate(c: Chamber, b: LoopMatrix) -> Chamber:
    return Chamber(c.sign, c.representative @ b)


def check_twin_axioms(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    n = cfg.n
    x = Chamber(Sign.PLUS, random_loop_matrix(cfg, rng, ctx.regularity))
    y_class = try_regularity(cfg, REGULARITY_CYCLE[(ctx.index // 4) % len(REGULARITY_CYCLE)])
    y = Chamber(Sign.MINUS, random_loop_matrix(cfg, rng, y_class))
    w = codelta(x, y)
    ctx.check(codelta(y, x) == w.inverse(), "codistance_inverse", x=x, y=y)
    # the twin apartment through x and y carries the witness for each panel of y
    left = birkhoff(y.representative.inverse() @ x.representative).left_witness
    assert isinstance(left, LoopMatrix)
    negative_frame = y.representative @ left.inverse()
    for s in range(n):
        s_label = simple_reflection(n, s)
        ws = w * s_label
        if ws.length < w.length:
            labels = [codelta(x, z) for z in _panel_members(Panel(y, s), 3)]
            ctx.check(all(v == ws for v in labels), "twin_b", f"s={s}", x=x, y=y, w=w)
        z = Chamber(Sign.MINUS, negative_frame @ simple_representative(n, s, cfg.scalar_field))
        ctx.check(delta(y, z).label == s_label, "twin_c_adjacent", f"s={s}", x=x, y=y)
        ctx.check(codelta(x, z) == ws, "twin_c", f"s={s}", x=x, y=y, w=w)


def check_partition(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    g = random_loop_matrix(cfg, rng, ctx.regularity)
    w_random = AffinePermutation.identity(cfg.n)
    for s in (rng.randrange(cfg.n) for _ in range(rng.randint(0, 4))):
        w_random = w_random * simple_reflection(cfg.n, s)
    representative = weyl_to_monomial(w_random, cfg.scalar_field)
    for mode in DecompositionMode:
        left_sign, right_sign = iwahori_sides(mode)
        ctx.check(
            decompose(representative, mode, exact=True).label == w_random,
            "monomial_label",
            mode.value,
            w=w_random,
        )
        if mode.sign is not None:
            if not regularity_class(g).admits(mode.sign):
                continue
        label = decompose(g, mode).label
        if mode.sign is not None:
            exact = decompose(g, mode, exact=True).label
            ctx.check(exact == label, "series_vs_exact", mode.value, g=g)
        moved = (
            random_rational_iwahori(cfg, rng, left_sign) @ g @ random_rational_iwahori(cfg, rng, right_sign)
        )
        ctx.check(decompose(moved, mode, exact=True).label == label, "double_coset", mode.value, g=g)


def check_isometry(ctx: SampleContext) -> None:
    cfg, rng, sign = ctx.cfg, ctx.rng, ctx.sign
    n = cfg.n
    h = random_loop_matrix(cfg, rng, ctx.regularity)
    c = Chamber(sign, random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC))
    d = Chamber(sign, c.representative @ random_loop_matrix(cfg, rng, ctx.regular_for(sign)))
    ctx.check(delta(translate(h, c), translate(h, d)) == delta(c, d), "delta_isometry", h=h, c=c, d=d)
    x = Chamber(Sign.PLUS, random_loop_matrix(cfg, rng, ctx.regularity))
    y = Chamber(Sign.MINUS, random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC))
    ctx.check(
        codelta(translate(h, x), translate(h, y)) == codelta(x, y), "codelta_isometry", h=h, x=x, y=y
    )
    base = standard_chamber(n, sign, cfg.scalar_field)
    b = random_iwahori(cfg, rng, sign)
    ctx.check(in_iwahori(b, sign), "iwahori_generator", b=b)
    ctx.check(same_chamber(translate(b, base), base), "stabilizer_contains", b=b)
    s = rng.randrange(n)
    a = random_scalar(cfg.scalar_field, rng, nonzero=True)
    outside = root_element(n, sign.opposite, s, a, cfg.scalar_field)
    ctx.check(not in_iwahori(outside, sign), "opposite_root_outside", h=outside)
    ctx.check(not same_chamber(translate(outside, base), base), "stabilizer_excludes", h=outside)
    k = random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC)
    ctx.check(
        same_chamber(translate(k, base), base) == in_iwahori(k, sign), "stabilizer_membership", h=k
    )


def check_apartment(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    n = cfg.n
    g = (
        LoopMatrix.identity(n, cfg.scalar_field)
        if ctx.index == 0
        else random_loop_matrix(cfg, rng, ctx.regularity)
    )
    x, y = Chamber(Sign.PLUS, g), Chamber(Sign.MINUS, g)
    if not ctx.check(is_opposite(x, y), "translated_pair_opposite", g=g):
        return
    apartment = twin_apartment(x, y)
    for w in elements_up_to_length(n, cfg.apartment_radius):
        for sign, base in ((Sign.PLUS, x), (Sign.MINUS, y)):
            member = apartment.chamber(w, sign)
            ctx.check(delta(base, member).label == w, "enumerator_position", sign.value, g=g, w=w)
            ctx.check(apartment.contains(member), "enumerator_membership", sign.value, g=g, w=w)
            if w.length <= cfg.convexity_radius and sign is Sign.PLUS:
                path = gallery(x, member)
                ctx.check(len(path) == w.length + 1, "gallery_length", g=g, w=w)
                ctx.check(all(apartment.contains(z) for z in path), "convexity", g=g, w=w)
    bad = Chamber(Sign.MINUS, g @ simple_representative(n, 1, cfg.scalar_field))
    try:
        twin_apartment(x, bad)
    except NotOpposite:
        pass
    else:
        ctx.check(False, "not_opposite_rejected", g=g)


# -- city ---------------------------------------------------------------------


def check_city_equivalence(ctx: SampleContext) -> None:
    cfg, rng, sign = ctx.cfg, ctx.rng, ctx.sign
    chambers = [
        Chamber(sign, random_loop_matrix(cfg, rng, try_regularity(cfg, rng.choice(REGULARITY_CYCLE))))
        for _ in range(3)
    ]
    c1, c2, c3 = chambers
    ctx.check(same_component(c1, c1), "reflexive", c=c1)
    s12, s23, s13 = same_component(c1, c2), same_component(c2, c3), same_component(c1, c3)
    ctx.check(s12 == same_component(c2, c1), "symmetric", c=c1, d=c2)
    if s12 and s23:
        ctx.check(s13, "transitive", c=c1, d=c2, e=c3)
    ctx.check(s12 == delta(c1, c2).is_finite, "component_iff_finite", c=c1, d=c2)

    registry = ComponentRegistry(cfg.n)
    components = [component_of(c, registry) for c in chambers]
    shifted = _right_translate(c1, random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC))
    ctx.check(component_of(shifted, registry).index == components[0].index, "registry_stable", c=c1)
    for k in range(2):
        a, b = chambers[k], chambers[k + 1]
        if components[k].index != components[k + 1].index:
            ctx.check(not delta(a, b).is_finite, "distinct_components_infinite", c=a, d=b)

    other = Chamber(sign.opposite, random_loop_matrix(cfg, rng, ctx.regularity))
    label = cross_codistance(c1, other)
    ctx.check(
        cross_codistance(other, c1) == label.inverse(), "cross_codistance_inverse", c=c1, d=other
    )
    h = random_loop_matrix(cfg, rng, ctx.regular_for(sign.opposite))
    ctx.check(is_isometric_translate(h, c1, c2), "left_action", h=h, c=c1, d=c2)


def check_ultrametric(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    if ctx.index == 0 and not cfg.scalar_field.is_finite:
        field_ = cfg.scalar_field
        base = LoopMatrix.identity(cfg.n, field_)
        same = pseudo_distance(Component(Sign.PLUS, base), Component(Sign.PLUS, base))
        ctx.check(same.nu == INFINITE_GRADE, "anchor_same")
        for root, grade in ANCHOR_GRADES.items():
            # the twist opens a new component only for the sign that cannot absorb its pole
            sign = Sign.MINUS if abs(root) > 1 else Sign.PLUS
            twist = LoopMatrix.elementary(cfg.n, 1, 2, RationalFunction.simple_pole(root, field_), field_)
            nu = pseudo_distance(Component(sign, base), Component(sign, twist)).nu
            ctx.check(nu == grade, "anchor_grade", f"pole {root}: nu {format_grade(nu)}")
    twists = [random_loop_matrix(cfg, rng) for _ in range(3)]
    b1, b2, b3 = (Component(Sign.PLUS, t) for t in twists)
    d12, d23, d13 = pseudo_distance(b1, b2), pseudo_distance(b2, b3), pseudo_distance(b1, b3)
    largest = d12 if d23 <= d12 else d23
    ctx.check(d13 <= largest, "strong_triangle", b1=twists[0], b2=twists[1], b3=twists[2])
    if d12.nu != d23.nu:
        ctx.check(d13.nu == largest.nu, "ultrametric_equality", b1=twists[0], b2=twists[1], b3=twists[2])
    reroot_class = try_regularity(cfg, RegularityClass.PLUS_ONLY)
    reroot = Component(Sign.PLUS, twists[0] @ random_loop_matrix(cfg, rng, reroot_class))
    ctx.check(pseudo_distance(reroot, b2).nu == d12.nu, "reroot_invariance", b1=twists[0], b2=twists[1])


# -- counting and oracles -----------------------------------------------------


def check_counting(ctx: SampleContext) -> None:
    cfg = ctx.cfg
    field_ = cfg.scalar_field
    if not ctx.check(field_.is_finite, "finite_field", f"counting needs F_p, got {field_.tag}"):
        return
    counts = chamber_counts(field_, cfg.n, cfg.ball_radius)
    by_length: dict[int, set[int]] = {}
    for w, count in counts.items():
        by_length.setdefault(w.length, set()).add(count)
        ctx.check(count == field_.p**w.length, "count", f"{w}: {count}", w=w)
    ctx.summary["counts_by_length"] = {str(k): sorted(v) for k, v in sorted(by_length.items())}


@lru_cache(maxsize=4)
def _oracle_population(tag: str, n: int, low: int, high: int) -> tuple[LoopMatrix, ...]:
    return tuple(small_matrices(field_from_tag(tag), n, low, high))


def _population_size(cfg: GeneratorConfig) -> int:
    if not cfg.scalar_field.is_finite:
        return 0
    return len(_oracle_population(cfg.field_tag, cfg.n, cfg.degree_low, cfg.degree_high))


def check_oracle(ctx: SampleContext) -> None:
    cfg = ctx.cfg
    g = _oracle_population(cfg.field_tag, cfg.n, cfg.degree_low, cfg.degree_high)[ctx.index]
    for mode in DecompositionMode:
        expected = oracle_bruhat_bfs(g, mode)
        got = decompose(g, mode).label
        ctx.check(got == expected, "oracle_agreement", f"{mode.value}: {got} vs {expected}", g=g)


def check_witness(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    for mode in DecompositionMode:
        left_sign, right_sign = iwahori_sides(mode)
        regularity = ctx.regularity if mode.sign is None else ctx.regular_for(mode.sign)
        g = random_loop_matrix(cfg, rng, regularity)
        g = random_rational_iwahori(cfg, rng, left_sign) @ g @ random_rational_iwahori(cfg, rng, right_sign)
        result = decompose(g, mode, exact=True)
        left, right = result.left_witness, result.right_witness
        assert isinstance(left, LoopMatrix)
        target = weyl_to_monomial(result.label, cfg.scalar_field)
        ctx.check(left @ g @ right == target, "exact_identity", mode.value, g=g)
        ctx.check(in_iwahori(left, left_sign), "left_witness_iwahori", mode.value, g=g)
        ctx.check(in_iwahori(right, right_sign), "right_witness_iwahori", mode.value, g=g)
        if mode.sign is not None:
            series = rational_bruhat(g, mode.sign)
            place = Place.ZERO if mode.sign is Sign.PLUS else Place.INFINITY
            product = series.left_witness @ g.expand(place, series.precision_used) @ series.right_witness
            ctx.check(product.agrees_with(target), "series_identity", mode.value, g=g)


# -- infinity and flip --------------------------------------------------------


def _finite_permutation_matrix(perm: tuple[int, ...], cfg: GeneratorConfig) -> LoopMatrix:
    return weyl_to_monomial(AffinePermutation(len(perm), perm), cfg.scalar_field)


def _random_unipotent(cfg: GeneratorConfig, rng: random.Random) -> LoopMatrix:
    n, field_ = cfg.n, cfg.scalar_field
    result = LoopMatrix.identity(n, field_)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            result = result @ LoopMatrix.elementary(n, i, j, random_scalar(field_, rng), field_)
    return result


def _dominant_shift(direction: tuple[int, ...], k: int, cfg: GeneratorConfig) -> LoopMatrix:
    values = [RationalFunction.monomial(k * m, cfg.scalar_field) for m in sector_ray(direction)]
    return LoopMatrix.diagonal(values, cfg.scalar_field)


def check_infinity_axioms(ctx: SampleContext) -> None:
    cfg, rng = ctx.cfg, ctx.rng
    n = cfg.n
    g = random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC)
    f1 = flag_from_matrix(g)
    w = SphericalPosition(tuple(rng.sample(range(1, n + 1), n)))
    f2 = flag_from_matrix(g @ _finite_permutation_matrix(w.perm, cfg) @ _random_unipotent(cfg, rng))
    ctx.check(relative_position(f1, f1).is_identity(), "self_identity", g=g)
    position = relative_position(f1, f2)
    ctx.check(position == w, "apartment_position", f"got {position}", g=g, w=w)
    ctx.check(relative_position(f2, f1) == position.inverse(), "inverse", g=g, w=w)
    ctx.check(is_opposite_flags(f1, f2) == is_transverse(f1, f2), "opposite_transverse", g=g, w=w)
    h = random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC)
    ctx.check(relative_position(apply(h, f1), apply(h, f2)) == position, "action", g=g, h=h, w=w)

    i = rng.randrange(1, n)
    s = SphericalPosition(tuple(i + 1 if k == i else i if k == i + 1 else k for k in range(1, n + 1)))
    neighbor = adjacent_flag(f1, i, random_scalar(cfg.scalar_field, rng))
    ctx.check(relative_position(neighbor, f1) == s, "panel_distance", g=g, w=w)
    moved = relative_position(neighbor, f2)
    sw = s * position
    ctx.check(moved in (sw, position), "wd2_options", f"got {moved}", g=g, w=w)
    if sw.length == position.length + 1:
        ctx.check(moved == sw, "wd2_lengthening", f"got {moved}", g=g, w=w)
    witness = flag_from_matrix(g @ _finite_permutation_matrix(s.perm, cfg))
    ctx.check(relative_position(witness, f2) == sw, "wd3", g=g, w=w)

    third = random_flag(cfg, rng)
    ctx.check(
        relative_position(third, f1) == relative_position(f1, third).inverse(), "inverse_random", g=g
    )

    direction = tuple(rng.sample(range(1, n + 1), n))
    sector = sector_to_flag(g, direction)
    for k in range(1, 6):
        shifted = sector_to_flag(g @ _dominant_shift(direction, k, cfg), direction)
        ctx.check(same_flag(sector, shifted), "sector_shift", f"k={k}", g=g)

    if ctx.index % 10 == 0:
        apartment = twin_apartment(Chamber(Sign.PLUS, g), Chamber(Sign.MINUS, g))
        ctx.check(boundary_pair_check(apartment), "boundary_pair", g=g)
        other = Chamber(Sign.MINUS, apartment.frame @ root_element(n, Sign.PLUS, 1, 1, cfg.scalar_field))
        mismatched = replace(apartment, negative=other)
        ctx.check(not boundary_pair_check(mismatched), "boundary_control", g=g)


def check_flip(ctx: SampleContext) -> None:
    cfg, rng, sign = ctx.cfg, ctx.rng, ctx.sign
    x = Chamber(sign, random_loop_matrix(cfg, rng, ctx.regularity))
    flipped = bn_flip(x)
    ctx.check(flipped.sign is sign.opposite, "sign_flipped", x=x)
    ctx.check(same_chamber(bn_flip(flipped), x), "involution", x=x)
    std = standard_chamber(cfg.n, Sign.PLUS, cfg.scalar_field)
    ctx.check(
        same_chamber(bn_flip(std), standard_chamber(cfg.n, Sign.MINUS, cfg.scalar_field)),
        "standard_swapped",
    )
    d = _right_translate(x, random_loop_matrix(cfg, rng, ctx.regular_for(sign)))
    ctx.check(delta(bn_flip(x), bn_flip(d)) == delta(x, d), "distance_swap", x=x, d=d)
    y = Chamber(sign.opposite, random_loop_matrix(cfg, rng, RegularityClass.ALGEBRAIC))
    ctx.check(codelta(bn_flip(x), bn_flip(y)) == codelta(x, y), "codistance", x=x, y=y)
    b = random_iwahori(cfg, rng, sign)
    ctx.check(in_iwahori(b.flip(), sign.opposite), "iwahori_swap", b=b)


SUITES: dict[str, SuiteSpec] = {
    spec.name: spec
    for spec in (
        SuiteSpec("wd_axioms", check_wd_axioms, "Weyl distance axioms and panels"),
        SuiteSpec("twin_axioms", check_twin_axioms, "Codistance symmetry and the twin axioms"),
        SuiteSpec("partition", check_partition, "Double-coset labels are well defined"),
        SuiteSpec("isometry", check_isometry, "Left action isometries and chamber stabilizers"),
        SuiteSpec("apartment", check_apartment, "Twin apartment enumeration and convexity"),
        SuiteSpec("city_equivalence", check_city_equivalence, "Components of the city"),
        SuiteSpec("ultrametric", check_ultrametric, "Pseudo-distance between components"),
        SuiteSpec("counting", check_counting, "Chamber counts in balls", lambda cfg: 1),
        SuiteSpec("infinity_axioms", check_infinity_axioms, "Flags at infinity"),
        SuiteSpec("flip", check_flip, "BN-flip"),
        SuiteSpec("oracle", check_oracle, "Elimination against the search oracle", _population_size),
        SuiteSpec("witness", check_witness, "Witness identities"),
    )
}


def _run_sample(spec: SuiteSpec, cfg: GeneratorConfig, index: int) -> SampleContext:
    ctx = SampleContext(spec.name, index, cfg, derive_rng(cfg, spec.name, index))
    try:
        spec.check(ctx)
    except TwinCityError as exc:
        ctx.check(False, "error", f"{exc.code}: {exc.detail}")
    return ctx


def run_suite(
    name: str,
    cfg: GeneratorConfig,
    *,
    workers: int | None = None,
    timing: bool = False,
) -> SuiteReport:
    """Run one suite over the configured samples.

    Raises:
        InputError: Unknown suite name
    """
    spec = SUITES.get(name)
    if spec is None:
        raise InputError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
    workers = workers or get_settings().check_workers
    count = spec.sample_count(cfg)
    logger.info(f"Suite {name}: {count} samples on {workers} worker(s)")
    start = time.perf_counter()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        contexts = list(pool.map(lambda k: _run_sample(spec, cfg, k), range(count)))
    report = SuiteReport(suite=name, samples=count, config=cfg.replay())
    for ctx in contexts:
        report.violations.extend(ctx.violations)
        report.summary.update(ctx.summary)
    if timing:
        report.wall_time = time.perf_counter() - start
    logger.info(f"Suite {name} finished with {len(report.violations)} violation(s)")
    return report
