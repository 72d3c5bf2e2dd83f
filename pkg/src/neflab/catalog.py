"""Catalog of proven-nef generators and known obstructions on C x C.

Each generator family records where it applies: the genus range and the
generality the underlying construction needs ("arbitrary" curve, "general",
"very general" in moduli, or a curve carrying a simple branched cover of
P^1 of a given degree).  Instances are exact rational classes; families with
an irrational threshold store a sound rational over-approximation.

Obstructions are effective irreducible curves every nef class must meet
nonnegatively: the fibers, the diagonal, and — for curves with a simple
degree-d cover (automatic for every genus-2 curve at d = 2) — the trace curve
T_d = d f1 + d f2 - delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .config import DEFAULT_CONFIG, NeflabConfig
from .exact import Rational, as_fraction, ceil_sqrt_fraction, floor_sqrt, frac_str
from .neronseveri import DELTA, F1, F2, SurfaceClass

__all__ = [
    "Generality",
    "GenusContext",
    "Instance",
    "Generator",
    "RayGenerator",
    "Region",
    "Obstruction",
    "generators",
    "generator_by_name",
    "obstructions",
    "boundary_samples",
    "instance_points",
    "dump",
]


class Generality(Enum):
    ARBITRARY = "arbitrary"
    GENERAL = "general"
    VERY_GENERAL = "very-general"
    SIMPLE_COVER = "simple-cover"

    @classmethod
    def parse(cls, text: str) -> "Generality":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown generality level: {text!r}")


_CHAIN_RANK = {Generality.ARBITRARY: 0, Generality.GENERAL: 1, Generality.VERY_GENERAL: 2}


@dataclass(frozen=True)
class GenusContext:
    """Genus plus how special the curve is allowed to be.

    SimpleCover(d) means: some simple branched cover C -> P^1 of degree d
    exists.  It sits outside the arbitrary/general/very-general chain (such a
    curve is special), so only arbitrary-curve results apply there, plus the
    cover-specific region and trace obstruction.
    """

    g: int
    level: Generality = Generality.ARBITRARY
    cover_degree: int | None = None

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        if self.level is Generality.SIMPLE_COVER:
            if self.cover_degree is None or self.cover_degree < 2:
                raise ValueError("simple-cover context needs cover_degree >= 2")
        elif self.cover_degree is not None:
            raise ValueError("cover_degree only makes sense at the simple-cover level")

    def admits(self, needed: Generality) -> bool:
        """Do results proven at generality `needed` apply to this context?"""
        if self.level is Generality.SIMPLE_COVER:
            return needed is Generality.ARBITRARY
        return _CHAIN_RANK[self.level] >= _CHAIN_RANK[needed]

    def to_dict(self) -> dict:
        out: dict = {"g": self.g, "level": self.level.value}
        if self.cover_degree is not None:
            out["cover_degree"] = self.cover_degree
        return out


@dataclass(frozen=True)
class Instance:
    """One exact member of a generator family (params empty for rays)."""

    params: tuple[tuple[str, Fraction], ...]
    cls: SurfaceClass

    def params_dict(self) -> dict[str, str]:
        return {k: frac_str(v) for k, v in self.params}

    def to_dict(self) -> dict:
        return {"params": self.params_dict(), "class": self.cls.to_dict()}


def _inst(cls: SurfaceClass, **params: Rational) -> Instance:
    items = tuple(sorted((k, as_fraction(v)) for k, v in params.items()))
    return Instance(items, cls)


class Generator:
    """Interface shared by rays, one-parameter families and regions."""

    kind = "generator"
    name: str
    provenance: str

    def instances(self, config: NeflabConfig) -> list[Instance]:
        raise NotImplementedError

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        """Best instance with a0 <= target.a, b0 <= target.b on the same
        delta-coefficient slice, or None."""
        return None

    def value_at(self, a: Fraction) -> Fraction | None:
        """Least b this generator alone certifies at the given a on the
        c = -1 slice (rays and integer families answer with their staircase,
        continuous families with their closed form at a)."""
        return None

    def instance_from_params(self, params: dict[str, str],
                             config: NeflabConfig) -> SurfaceClass:
        """Rebuild + validate an instance from its serialized parameters."""
        raise NotImplementedError

    def describe(self, config: NeflabConfig) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "provenance": self.provenance,
            "instances": [inst.to_dict() for inst in self.instances(config)],
        }


class RayGenerator(Generator):
    kind = "ray"

    def __init__(self, name: str, cls: SurfaceClass, provenance: str):
        self.name = name
        self.cls = cls
        self.provenance = provenance

    def instances(self, config: NeflabConfig) -> list[Instance]:
        return [_inst(self.cls)]

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        c = self.cls
        if c.c == target.c and c.a <= target.a and c.b <= target.b:
            return _inst(c)
        return None

    def value_at(self, a: Fraction) -> Fraction | None:
        if self.cls.c == -1 and a >= self.cls.a:
            return self.cls.b
        return None

    def instance_from_params(self, params, config) -> SurfaceClass:
        if params:
            raise ValueError(f"ray {self.name} takes no parameters")
        return self.cls

    def describe(self, config: NeflabConfig) -> dict:
        out = super().describe(config)
        out["class"] = self.cls.to_dict()
        return out


class _ContinuousFamily(Generator):
    """One-parameter family on a fixed delta slice, exact closed form."""

    kind = "family"
    param = "a0"
    c_slice = Fraction(-1)
    closed_form = ""

    def __init__(self, g: int):
        self.g = g

    def beta(self, x: Fraction) -> Fraction:
        """Second coefficient as a function of x = (param - 1); x > 0."""
        raise NotImplementedError

    def build(self, a0: Fraction) -> SurfaceClass:
        a0 = as_fraction(a0)
        if a0 <= 1:
            raise ValueError(f"{self.name} needs parameter > 1, got {a0}")
        return SurfaceClass(a0, self.beta(a0 - 1), self.c_slice)

    def _sample_params(self, config: NeflabConfig) -> list[Fraction]:
        return [1 + Fraction(k, 2) for k in range(1, config.family_samples + 1)]

    def instances(self, config: NeflabConfig) -> list[Instance]:
        return [_inst(self.build(p), **{self.param: p}) for p in self._sample_params(config)]

    def value_at(self, a: Fraction) -> Fraction | None:
        if a > 1:
            return self.beta(a - 1)
        return None

    def instance_from_params(self, params, config) -> SurfaceClass:
        if set(params) != {self.param}:
            raise ValueError(f"family {self.name} expects parameter {self.param!r}")
        return self.build(as_fraction(params[self.param]))

    def describe(self, config: NeflabConfig) -> dict:
        out = super().describe(config)
        out["closed_form"] = self.closed_form
        return out


class VojtaRabindranathFamily(_ContinuousFamily):
    """a f1 + (1 + g/(a-1) + (g-1)(a-1)) f2 - delta, any curve of genus >= 1, a > 1."""

    name = "vojta_rabindranath"
    provenance = ("Vojta's construction on C x C with Rabindranath's genus-weighted "
                  "coefficient; valid on every smooth curve of genus >= 1")
    closed_form = "b = 1 + g/(a-1) + (g-1)*(a-1), a > 1"

    def beta(self, x: Fraction) -> Fraction:
        return 1 + Fraction(self.g, 1) / x + (self.g - 1) * x

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        if target.c != self.c_slice or target.a <= 1:
            return None
        X = target.a - 1
        if self.g == 1:
            xm = X  # b decreasing in the parameter, best at the query itself
        else:
            # b(x) <= bq is the parabola (g-1)x^2 - (bq-1)x + g <= 0; its
            # rational vertex is the best feasible x once clamped to (0, X].
            xv = (target.b - 1) / (2 * (self.g - 1))
            xm = min(X, xv)
        if xm <= 0:
            return None
        b0 = self.beta(xm)
        if b0 <= target.b:
            return _inst(SurfaceClass(1 + xm, b0, self.c_slice), **{self.param: 1 + xm})
        return None


class JacobianRestrictionFamily(_ContinuousFamily):
    """d f1 + (1 + g^2/(d-1)) f2 - delta, restriction of nef classes from
    the product of Jacobians; any curve of genus >= 1, real d > 1."""

    name = "jacobian_restriction"
    param = "d"
    provenance = ("restriction to C x C of nef classes on J(C) x J(C); "
                  "valid on every smooth curve of genus >= 1")
    closed_form = "b = 1 + g^2/(d-1), d > 1"

    def beta(self, x: Fraction) -> Fraction:
        return 1 + Fraction(self.g * self.g, 1) / x

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        if target.c != self.c_slice or target.a <= 1:
            return None
        x = target.a - 1  # b decreasing in d: evaluate at the query itself
        b0 = self.beta(x)
        if b0 <= target.b:
            return _inst(SurfaceClass(target.a, b0, self.c_slice), **{self.param: target.a})
        return None


class VojtaMixedFamily(Generator):
    """-t f1 + (-1 + g/(1-t) + (g-1)(1-t)) f2 + delta for 0 <= t < 1.

    The mirror-image regime of Vojta's construction: positive diagonal
    coefficient, one slightly negative fiber coefficient.  At t = 0 this is
    the edge ray (2g-2) f2 + delta.
    """

    kind = "family"
    name = "vojta_mixed"
    param = "t"
    provenance = "Vojta's mixed-sign nef classes on C x C, genus >= 1, 0 <= t < 1"
    closed_form = "-t f1 + (-1 + g/(1-t) + (g-1)*(1-t)) f2 + delta, 0 <= t < 1"

    def __init__(self, g: int):
        self.g = g

    def build(self, t: Fraction) -> SurfaceClass:
        t = as_fraction(t)
        if not 0 <= t < 1:
            raise ValueError(f"vojta_mixed needs 0 <= t < 1, got {t}")
        u = 1 - t
        b = -1 + Fraction(self.g, 1) / u + (self.g - 1) * u
        return SurfaceClass(-t, b, 1)

    def instances(self, config: NeflabConfig) -> list[Instance]:
        n = config.family_samples
        return [_inst(self.build(Fraction(k, n + 1)), t=Fraction(k, n + 1)) for k in range(n + 1)]

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        if target.c != 1:
            return None
        t_star = max(Fraction(0), -target.a)
        if t_star >= 1:
            return None
        inst = self.build(t_star)  # b increasing in t: smallest admissible t wins
        if inst.b <= target.b:
            return _inst(inst, t=t_star)
        return None

    def instance_from_params(self, params, config) -> SurfaceClass:
        if set(params) != {self.param}:
            raise ValueError("vojta_mixed expects parameter 't'")
        return self.build(as_fraction(params[self.param]))

    def describe(self, config: NeflabConfig) -> dict:
        out = super().describe(config)
        out["closed_form"] = self.closed_form
        return out


class IntegerFamily(Generator):
    """Family indexed by an integer degree d, with b decreasing in d."""

    kind = "family"
    param = "d"

    def __init__(self, name: str, g: int, d_min: int, d_max: int | None,
                 dump_max: int, beta, provenance: str, closed_form: str):
        self.name = name
        self.g = g
        self.d_min = d_min
        self.d_max = d_max  # None = unbounded above
        self.dump_max = dump_max
        self._beta = beta
        self.provenance = provenance
        self.closed_form = closed_form

    def build(self, d: Rational) -> SurfaceClass:
        d = as_fraction(d)
        if d.denominator != 1:
            raise ValueError(f"{self.name} takes integer degrees, got {d}")
        d_int = int(d)
        if d_int < self.d_min or (self.d_max is not None and d_int > self.d_max):
            raise ValueError(f"{self.name}: degree {d_int} outside [{self.d_min}, {self.d_max}]")
        return SurfaceClass(d_int, self._beta(d_int), -1)

    def instances(self, config: NeflabConfig) -> list[Instance]:
        top = self.dump_max if self.d_max is None else min(self.d_max, self.dump_max)
        return [_inst(self.build(d), d=d) for d in range(self.d_min, top + 1)]

    def dominating_instance(self, target: SurfaceClass) -> Instance | None:
        if target.c != -1:
            return None
        d = math.floor(target.a)
        if self.d_max is not None:
            d = min(d, self.d_max)
        if d < self.d_min:
            return None
        b0 = self._beta(d)
        if b0 <= target.b:
            return _inst(SurfaceClass(d, b0, -1), d=d)
        return None

    def value_at(self, a: Fraction) -> Fraction | None:
        inst = self.dominating_instance(SurfaceClass(a, Fraction(10**30), -1))
        return None if inst is None else inst.cls.b

    def instance_from_params(self, params, config) -> SurfaceClass:
        if set(params) != {self.param}:
            raise ValueError(f"family {self.name} expects parameter 'd'")
        return self.build(as_fraction(params[self.param]))

    def describe(self, config: NeflabConfig) -> dict:
        out = super().describe(config)
        out["closed_form"] = self.closed_form
        out["degree_range"] = [self.d_min, self.d_max]
        return out


class Region(Generator):
    """Rectangle-plus-halfplane region {a >= d, b >= d, a+b >= 2 + 2g/(d-1)}.

    Realized by degeneration to simple branched covers of P^1 of degree d.
    For (d-1)^2 <= g its boundary line a+b = 2 + 2g/(d-1) is exactly where the
    pairing with the trace curve T_d vanishes; beyond that range the region
    sits in the ample interior and the sum inequality is implied by a,b >= d.
    """

    kind = "region"

    def __init__(self, g: int, d: int, provenance: str):
        if d < 2:
            raise ValueError("cover degree must be >= 2")
        self.g = g
        self.d = d
        self.name = f"cover_region_d{d}"
        self.provenance = provenance
        self.threshold = 2 + Fraction(2 * g, d - 1)
        self.interior = (d - 1) * (d - 1) > g

    def inequalities(self) -> list[str]:
        return [f"a >= {self.d}", f"b >= {self.d}", f"a + b >= {frac_str(self.threshold)}"]

    def contains(self, a: Fraction, b: Fraction) -> bool:
        return a >= self.d and b >= self.d and a + b >= self.threshold

    def min_b_at(self, a: Fraction) -> Fraction | None:
        if a < self.d:
            return None
        return max(Fraction(self.d), self.threshold - a)

    value_at = min_b_at

    def instances(self, config: NeflabConfig) -> list[Instance]:
        d = Fraction(self.d)
        lo_corner = self.min_b_at(d)
        sym = max(d, self.threshold / 2)
        points = [(d, lo_corner), (lo_corner, d), (sym, sym)]
        out, seen = [], set()
        for a, b in points:
            if (a, b) not in seen:
                seen.add((a, b))
                out.append(_inst(SurfaceClass(a, b, -1), a=a, b=b))
        return out

    def instance_from_params(self, params, config) -> SurfaceClass:
        if set(params) != {"a", "b"}:
            raise ValueError("region instances carry parameters 'a' and 'b'")
        a, b = as_fraction(params["a"]), as_fraction(params["b"])
        if not self.contains(a, b):
            raise ValueError(f"({a}, {b}) is outside {self.name}")
        return SurfaceClass(a, b, -1)

    def describe(self, config: NeflabConfig) -> dict:
        out = super().describe(config)
        out["d"] = self.d
        out["inequalities"] = self.inequalities()
        out["interior"] = self.interior
        return out


@dataclass(frozen=True)
class Obstruction:
    """Effective irreducible curve every nef class must meet nonnegatively."""

    name: str
    cls: SurfaceClass
    provenance: str

    def to_dict(self) -> dict:
        return {"name": self.name, "class": self.cls.to_dict(), "provenance": self.provenance}


_FIBER_PROVENANCE = "fiber of a projection C x C -> C; nef and effective, on the cone boundary"


def _rays_for(g: int, denom: int) -> list[tuple[Generality, Generator]]:
    """(needed generality, generator) pairs for the ray-type entries."""
    arb = Generality.ARBITRARY
    out: list[tuple[Generality, Generator]] = [
        (arb, RayGenerator("fiber_f1", F1, _FIBER_PROVENANCE)),
        (arb, RayGenerator("fiber_f2", F2, _FIBER_PROVENANCE)),
    ]
    if g >= 1:
        edge = ("extremal ray of the nonnegative-coefficient face: with a,b,c >= 0 "
                "nefness is exactly nonnegative pairing with the diagonal")
        out.append((arb, RayGenerator("delta_edge_f1", SurfaceClass(2 * g - 2, 0, 1), edge)))
        out.append((arb, RayGenerator("delta_edge_f2", SurfaceClass(0, 2 * g - 2, 1), edge)))
        out.append((arb, RayGenerator(
            "theta_pullback", SurfaceClass(g - 1, g - 1, 1),
            "pullback of the theta polarization along the difference map C x C -> J(C)")))
    if g >= 1 and g != 2:
        out.append((Generality.VERY_GENERAL, RayGenerator(
            "very_general_a2", SurfaceClass(2, g + 1, -1),
            "2 f1 + (1+g) f2 - delta via specialization and symmetric interpolation "
            "on blowups of P^1 x P^1; fails for g = 2 (hyperelliptic trace)")))
        r = 1 + ceil_sqrt_fraction(g + 1, denom)
        out.append((Generality.VERY_GENERAL, RayGenerator(
            "ross_symmetric", SurfaceClass(r, r, -1),
            "Ross's symmetric threshold 1 + sqrt(g+1), rounded up to an exact "
            f"rational with denominator {denom}")))
    return out


def _general_curve_families(g: int) -> list[Generator]:
    out: list[Generator] = []
    if g >= 2:
        d0 = 3 * g // 2 + 1
        out.append(IntegerFamily(
            "general_kernel_nonspecial", g, d0, None, 2 * g,
            lambda d: 1 + Fraction(g, d - g),
            "semistable kernel bundles of nonspecial line bundles of degree d "
            "on a general curve, d >= floor(3g/2)+1",
            "b = 1 + g/(d-g), integer d >= floor(3g/2)+1"))
    if g >= 3:
        out.append(IntegerFamily(
            "general_kernel_special", g, 3 * g // 2, 2 * g - 2, 2 * g - 2,
            lambda d: Fraction(d, d - g + 1),
            "semistable kernel bundles of line bundles with h^1 = 1 on a "
            "general curve, floor(3g/2) <= d <= 2g-2",
            "b = d/(d-g+1), integer floor(3g/2) <= d <= 2g-2"))
    if g >= 10:
        d = 3 * g // 2 - 3
        b = Fraction(d, g // 2 - 1)
        out.append(RayGenerator(
            "general_clifford_ray", SurfaceClass(d, b, -1),
            "kernel-bundle ray at the Clifford-extremal degree floor(3g/2)-3 "
            "on a general curve of genus >= 10"))
    return out


def _regions_for(ctx: GenusContext) -> list[Region]:
    g = ctx.g
    vg_prov = ("degeneration to simple branched covers of P^1 of degree d "
               "(Kouvidakis-type); very general curve, 2 <= d <= floor(sqrt(g))+1")
    sc_prov = ("trace curve of the given simple degree-d cover: with a,b >= d, "
               "a f1 + b f2 - delta is nef iff (d-1)(a+b-2) >= 2g")
    regions: dict[int, Region] = {}
    if g >= 1 and ctx.admits(Generality.VERY_GENERAL):
        for d in range(2, floor_sqrt(g) + 2):
            regions[d] = Region(g, d, vg_prov)
    if ctx.level is Generality.SIMPLE_COVER:
        d = ctx.cover_degree
        regions.setdefault(d, Region(g, d, sc_prov))
    if g == 2:
        # every genus-2 curve is hyperelliptic, so the d = 2 region (and its
        # trace obstruction) applies at every level
        regions.setdefault(2, Region(g, 2, sc_prov))
    return [regions[d] for d in sorted(regions)]


@lru_cache(maxsize=256)
def _generators_cached(ctx: GenusContext, config: NeflabConfig) -> tuple[Generator, ...]:
    out: list[Generator] = []
    for needed, gen in _rays_for(ctx.g, config.sqrt_denominator):
        if ctx.admits(needed):
            out.append(gen)
    if ctx.g >= 1 and ctx.admits(Generality.ARBITRARY):
        out.append(VojtaRabindranathFamily(ctx.g))
        out.append(VojtaMixedFamily(ctx.g))
        out.append(JacobianRestrictionFamily(ctx.g))
    if ctx.admits(Generality.GENERAL):
        out.extend(_general_curve_families(ctx.g))
    out.extend(_regions_for(ctx))
    return tuple(out)


def generators(ctx: GenusContext, config: NeflabConfig = DEFAULT_CONFIG) -> tuple[Generator, ...]:
    """All generators whose applicability predicate holds in this context."""
    return _generators_cached(ctx, config)


def generator_by_name(ctx: GenusContext, name: str,
                      config: NeflabConfig = DEFAULT_CONFIG) -> Generator | None:
    for gen in generators(ctx, config):
        if gen.name == name:
            return gen
    return None


@lru_cache(maxsize=256)
def obstructions(ctx: GenusContext) -> tuple[Obstruction, ...]:
    """Universal fiber/diagonal obstructions plus context trace curves."""
    out = [
        Obstruction("fiber_f1", F1, _FIBER_PROVENANCE),
        Obstruction("fiber_f2", F2, _FIBER_PROVENANCE),
        Obstruction("diagonal", DELTA, "the diagonal curve in C x C"),
    ]
    trace_degrees = set()
    if (ctx.level is Generality.SIMPLE_COVER
            and (ctx.cover_degree - 1) ** 2 <= ctx.g):
        trace_degrees.add(ctx.cover_degree)
    if ctx.g == 2:
        trace_degrees.add(2)
    for d in sorted(trace_degrees):
        out.append(Obstruction(
            f"cover_trace_d{d}", SurfaceClass(d, d, -1),
            f"trace curve of a simple degree-{d} cover of P^1 "
            "(closure of C x_P1 C minus the diagonal); irreducible and effective"))
    return tuple(out)


def boundary_samples(ctx: GenusContext, a_min: Rational, a_max: Rational,
                     step: Rational, config: NeflabConfig = DEFAULT_CONFIG
                     ) -> list[tuple[Fraction, Fraction]]:
    """Least certified b on the a f1 + b f2 - delta slice, per sampled a.

    Each applicable generator contributes pointwise (closed forms at a,
    integer staircases, ray dominance, region edges); the minimum over
    generators is reported.  No cross-generator combinations here — those
    belong to the certifier.  Values at a given a may go up again as a grows
    (families cross), so no monotonicity is promised.
    """
    a_min, a_max, step = as_fraction(a_min), as_fraction(a_max), as_fraction(step)
    if a_min <= 1:
        raise ValueError("boundary sampling starts above a = 1")
    if step <= 0:
        raise ValueError("step must be positive")
    gens = generators(ctx, config)
    out: list[tuple[Fraction, Fraction]] = []
    a = a_min
    while a <= a_max:
        candidates = [v for gen in gens if (v := gen.value_at(a)) is not None]
        if candidates:
            out.append((a, min(candidates)))
        a += step
    return out


def instance_points(ctx: GenusContext, config: NeflabConfig = DEFAULT_CONFIG
                    ) -> list[tuple[str, SurfaceClass]]:
    """Flat (generator-name, class) list of every dumped instance."""
    out = []
    for gen in generators(ctx, config):
        for inst in gen.instances(config):
            out.append((gen.name, inst.cls))
    return out


def dump(ctx: GenusContext, config: NeflabConfig = DEFAULT_CONFIG) -> dict:
    """JSON-ready dump of the catalog for one context."""
    return {
        "context": ctx.to_dict(),
        "generators": [gen.describe(config) for gen in generators(ctx, config)],
        "obstructions": [ob.to_dict() for ob in obstructions(ctx)],
    }
