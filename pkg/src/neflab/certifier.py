"""Nef certification for classes a f1 + b f2 + c delta on C x C.

The verdict is three-valued.  "nef" always comes with a machine-checkable
certificate (a dominating catalog instance, a region membership, or an exact
nonnegative combination of catalog classes); "not-nef" comes with a witness
(a known effective curve met negatively, or a negative self-intersection).
Anything the catalog cannot settle is reported "unknown", never guessed.

Certificates survive a swap of the two factors and positive rescaling: both
normalizations are recorded so `replay` can reproduce the check exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import (
    GenusContext,
    Region,
    generator_by_name,
    generators,
    obstructions,
)
from .config import DEFAULT_CONFIG, NeflabConfig
from .conic import nonneg_solve
from .exact import as_fraction, frac_str
from .neronseveri import SurfaceClass, pair, self_intersection, swap

__all__ = [
    "Certificate",
    "Witness",
    "Verdict",
    "certify",
    "replay",
    "NEF",
    "NOT_NEF",
    "UNKNOWN",
]

NEF = "nef"
NOT_NEF = "not-nef"
UNKNOWN = "unknown"

_EXIT_CODES = {NEF: 0, NOT_NEF: 1, UNKNOWN: 2}


@dataclass(frozen=True)
class Certificate:
    """Replayable evidence that a class is nef.

    The certificate speaks about the *normalized* query: swap the factors if
    `swapped`, then divide by the positive `scale`.  Kinds:

    - "zero":      the class is 0;
    - "low-genus": genus <= 1, where the universal inequalities are complete;
    - "dominance": normalized query = catalog instance + nonneg fibers;
    - "region":    normalized query lies in a certified region (c = -1);
    - "conic":     explicit nonnegative combination of catalog instances.
    """

    kind: str
    swapped: bool = False
    scale: Fraction = Fraction(1)
    generator: str | None = None
    params: tuple[tuple[str, str], ...] = ()
    combination: tuple[tuple[str, tuple[tuple[str, str], ...], Fraction], ...] = ()
    inequalities: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "swapped": self.swapped, "scale": frac_str(self.scale)}
        if self.generator is not None:
            out["generator"] = self.generator
        if self.params:
            out["params"] = dict(self.params)
        if self.combination:
            out["combination"] = [
                {"generator": name, "params": dict(params), "coefficient": frac_str(coeff)}
                for name, params, coeff in self.combination
            ]
        if self.inequalities:
            out["inequalities"] = list(self.inequalities)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        comb = tuple(
            (
                entry["generator"],
                tuple(sorted(entry.get("params", {}).items())),
                as_fraction(entry["coefficient"]),
            )
            for entry in data.get("combination", [])
        )
        return cls(
            kind=data["kind"],
            swapped=bool(data.get("swapped", False)),
            scale=as_fraction(data.get("scale", 1)),
            generator=data.get("generator"),
            params=tuple(sorted(data.get("params", {}).items())),
            combination=comb,
            inequalities=tuple(data.get("inequalities", ())),
        )


@dataclass(frozen=True)
class Witness:
    """Replayable evidence that a class is not nef."""

    kind: str  # "obstruction" or "negative-square"
    value: Fraction
    obstruction: str | None = None
    obstruction_class: SurfaceClass | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "value": frac_str(self.value)}
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        if self.obstruction_class is not None:
            out["obstruction_class"] = self.obstruction_class.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Witness":
        oc = data.get("obstruction_class")
        return cls(
            kind=data["kind"],
            value=as_fraction(data["value"]),
            obstruction=data.get("obstruction"),
            obstruction_class=None if oc is None else SurfaceClass.from_dict(oc),
        )


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate | None = None
    witness: Witness | None = None
    diagnostics: tuple[str, ...] = ()

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.diagnostics:
            out["diagnostics"] = list(self.diagnostics)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        cert = data.get("certificate")
        wit = data.get("witness")
        return cls(
            status=data["status"],
            certificate=None if cert is None else Certificate.from_dict(cert),
            witness=None if wit is None else Witness.from_dict(wit),
            diagnostics=tuple(data.get("diagnostics", ())),
        )


def _screen(query: SurfaceClass, ctx: GenusContext) -> Witness | None:
    """Necessary conditions: known effective curves and the square."""
    for ob in obstructions(ctx):
        value = pair(query, ob.cls, ctx.g)
        if value < 0:
            return Witness("obstruction", value, ob.name, ob.cls)
    square = self_intersection(query, ctx.g)
    if square < 0:
        return Witness("negative-square", square)
    return None


def _low_genus_verdict(query: SurfaceClass, ctx: GenusContext) -> Verdict:
    """After the screen, genus 0 and 1 admit no further obstruction.

    g = 0: the diagonal is f1 + f2, so the class is (a+c) f1 + (b+c) f2 and
    the two fiber pairings decide.  g = 1: the nef cone is one branch of the
    closed light cone of the rank-3 even lattice, cut out exactly by the
    three pairings together with the square.
    """
    g = ctx.g
    checked = [f"{name} >= 0: {frac_str(val)}" for name, val in (
        ("pair with fiber_f1", pair(query, SurfaceClass(1, 0, 0), g)),
        ("pair with fiber_f2", pair(query, SurfaceClass(0, 1, 0), g)),
        ("pair with diagonal", pair(query, SurfaceClass(0, 0, 1), g)),
        ("self-intersection", self_intersection(query, g)),
    )]
    cert = Certificate(kind="low-genus", inequalities=tuple(checked))
    return Verdict(NEF, certificate=cert)


def _octant_conic(n: SurfaceClass, g: int, swapped: bool,
                  scale: Fraction) -> Certificate | None:
    """c = +1, a, b >= 0, pairing with the diagonal >= 0: split over the two
    diagonal edge rays plus fibers.  Exact by construction."""
    if g < 2 or n.a < 0 or n.b < 0:
        return None
    k = 2 * g - 2
    alpha = min(Fraction(1), n.a / k)
    beta = 1 - alpha
    s = n.a - alpha * k
    t = n.b - beta * k
    if t < 0 or s < 0:
        return None
    parts = []
    if alpha > 0:
        parts.append(("delta_edge_f1", (), alpha))
    if beta > 0:
        parts.append(("delta_edge_f2", (), beta))
    if s > 0:
        parts.append(("fiber_f1", (), s))
    if t > 0:
        parts.append(("fiber_f2", (), t))
    return Certificate(kind="conic", swapped=swapped, scale=scale, combination=tuple(parts))


def _conic_pool(ctx: GenusContext, config: NeflabConfig
                ) -> list[tuple[str, tuple[tuple[str, str], ...], SurfaceClass]]:
    pool = []
    for gen in generators(ctx, config):
        for inst in gen.instances(config):
            pool.append((gen.name, tuple(sorted(inst.params_dict().items())), inst.cls))
    return pool


def _search_slice(n: SurfaceClass, ctx: GenusContext, config: NeflabConfig,
                  swapped: bool, scale: Fraction,
                  notes: list[str]) -> Certificate | None:
    """Try dominance, then regions, then conic combinations, on one
    orientation of the (already scaled) query."""
    tag = "swapped" if swapped else "as-given"
    for gen in generators(ctx, config):
        inst = gen.dominating_instance(n)
        if inst is not None:
            return Certificate(
                kind="dominance", swapped=swapped, scale=scale,
                generator=gen.name, params=tuple(sorted(inst.params_dict().items())))
    notes.append(f"dominance ({tag}): no catalog instance sits weakly below the query")
    if n.c == -1:
        for gen in generators(ctx, config):
            if isinstance(gen, Region) and gen.contains(n.a, n.b):
                return Certificate(kind="region", swapped=swapped, scale=scale,
                                   generator=gen.name)
        notes.append(f"region ({tag}): no certified region contains the query")
    if n.c == 1:
        cert = _octant_conic(n, ctx.g, swapped, scale)
        if cert is not None:
            return cert
    pool = _conic_pool(ctx, config)
    coeffs = nonneg_solve([p[2].coefficients() for p in pool], n.coefficients())
    if coeffs is not None:
        parts = tuple((name, params, coeff)
                      for (name, params, _), coeff in zip(pool, coeffs) if coeff > 0)
        return Certificate(kind="conic", swapped=swapped, scale=scale, combination=parts)
    notes.append(f"conic ({tag}): no nonnegative combination over {len(pool)} instances")
    return None


def certify(query: SurfaceClass, ctx: GenusContext,
            config: NeflabConfig = DEFAULT_CONFIG) -> Verdict:
    """Decide nef / not-nef / unknown for one class in one context."""
    if query.is_zero():
        return Verdict(NEF, certificate=Certificate(kind="zero"))
    witness = _screen(query, ctx)
    if witness is not None:
        return Verdict(NOT_NEF, witness=witness)
    if ctx.g <= 1:
        return _low_genus_verdict(query, ctx)
    notes: list[str] = []
    for swapped in (False, True):
        oriented = swap(query) if swapped else query
        scale = abs(oriented.c) if oriented.c != 0 else Fraction(1)
        normalized = oriented.scale(Fraction(1) / scale) if scale != 1 else oriented
        cert = _search_slice(normalized, ctx, config, swapped, scale, notes)
        if cert is not None:
            return Verdict(NEF, certificate=cert)
    return Verdict(UNKNOWN, diagnostics=tuple(notes))


def _rebuild(ctx: GenusContext, config: NeflabConfig, name: str,
             params: tuple[tuple[str, str], ...]) -> SurfaceClass:
    gen = generator_by_name(ctx, name, config)
    if gen is None:
        raise ValueError(f"no generator named {name!r} in this context")
    return gen.instance_from_params(dict(params), config)


def replay(verdict: Verdict, query: SurfaceClass, ctx: GenusContext,
           config: NeflabConfig = DEFAULT_CONFIG) -> bool:
    """Re-check a verdict against the catalog from scratch.

    Every instance referenced by the certificate is rebuilt from its recorded
    parameters (which re-validates applicability), and the claimed inequality
    or combination is verified in exact arithmetic.  A tampered or misfiled
    certificate replays False; it never replays True by accident.
    """
    try:
        return _replay_inner(verdict, query, ctx, config)
    except (ValueError, KeyError, ZeroDivisionError):
        return False


def _replay_inner(verdict: Verdict, query: SurfaceClass, ctx: GenusContext,
                  config: NeflabConfig) -> bool:
    if verdict.status == NOT_NEF:
        w = verdict.witness
        if w is None:
            return False
        if w.kind == "negative-square":
            return self_intersection(query, ctx.g) == w.value < 0
        if w.kind == "obstruction":
            match = [ob for ob in obstructions(ctx) if ob.name == w.obstruction]
            if not match:
                return False
            return pair(query, match[0].cls, ctx.g) == w.value < 0
        return False
    if verdict.status == UNKNOWN:
        return certify(query, ctx, config).status == UNKNOWN
    cert = verdict.certificate
    if cert is None:
        return False
    if cert.kind == "zero":
        return query.is_zero()
    if cert.kind == "low-genus":
        return ctx.g <= 1 and _screen(query, ctx) is None
    if cert.scale <= 0:
        return False
    oriented = swap(query) if cert.swapped else query
    n = oriented.scale(Fraction(1) / cert.scale)
    if cert.kind == "dominance":
        inst = _rebuild(ctx, config, cert.generator, cert.params)
        return inst.c == n.c and inst.a <= n.a and inst.b <= n.b
    if cert.kind == "region":
        gen = generator_by_name(ctx, cert.generator, config)
        return (isinstance(gen, Region) and n.c == -1
                and gen.contains(n.a, n.b))
    if cert.kind == "conic":
        total = SurfaceClass(0, 0, 0)
        for name, params, coeff in cert.combination:
            if coeff < 0:
                return False
            total = total + coeff * _rebuild(ctx, config, name, params)
        return total == n
    return False
