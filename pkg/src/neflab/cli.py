"""Command-line front end.

Exit codes: certify-style commands use 0 = nef, 1 = not nef, 2 = unknown;
bad inputs exit 3; malformed invocations exit 64.  Every subcommand accepts
--json for machine-readable output.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import __version__
from .catalog import Generality, GenusContext, boundary_samples, dump
from .certifier import certify
from .config import NeflabConfig, load_config
from .cremona import P1XP1, P2, reduce_symmetric_class
from .exact import as_fraction, frac_str
from .interpolation import DEFAULT_PRIME, verify_lemma
from .neronseveri import MixedClass, SurfaceClass, lift_to_Cn
from .plotting import Overlays, PlotSpec, render
from .slopes import (
    MainCnClause,
    TwistedBundleData,
    asymptotic_limit,
    conormal_limit,
    higher_conormal_slope,
    mainCn_class,
    mainCn_condition,
    projective_bundle_nef,
    t_bundle_limit,
    t_bundle_normalized_slope,
)

click.UsageError.exit_code = 64

_LEVELS = [m.value for m in Generality]


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(3)


def _context(g: int, level: str, cover_degree: int | None) -> GenusContext:
    try:
        parsed = Generality.parse(level)
        if parsed is not Generality.SIMPLE_COVER:
            cover_degree = None
        return GenusContext(g, parsed, cover_degree)
    except ValueError as exc:
        _fail(str(exc))


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        _fail(f"bad rational {text!r}: {exc}")


def _emit(payload: dict, as_json: bool, human: str):
    click.echo(json.dumps(payload, indent=2) if as_json else human)


@click.group()
@click.version_option(__version__)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="TOML or JSON config file.")
@click.pass_context
def main(ctx, config_path):
    """Exact nef-class certification on the square C x C of a curve."""
    try:
        ctx.obj = load_config(config_path)
    except ValueError as exc:
        _fail(str(exc))


def _config(ctx) -> NeflabConfig:
    return ctx.obj


@main.command(name="certify")
@click.option("--g", "g", type=int, required=True, help="Genus of the curve.")
@click.option("--level", type=click.Choice(_LEVELS), default="arbitrary")
@click.option("--cover-degree", type=int, default=None)
@click.option("--class", "class_json", required=True,
              help='Class as JSON, e.g. \'{"a":"2","b":"11","c":"-1"}\'.')
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def certify_cmd(ctx, g, level, cover_degree, class_json, as_json):
    """Decide nef / not-nef / unknown, with certificate or witness."""
    context = _context(g, level, cover_degree)
    try:
        query = SurfaceClass.from_dict(json.loads(class_json))
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        _fail(f"bad --class payload: {exc}")
    verdict = certify(query, context, _config(ctx))
    if verdict.certificate is not None:
        via = verdict.certificate.kind
        if verdict.certificate.generator:
            via += f" via {verdict.certificate.generator}"
        detail = f" ({via})"
    elif verdict.witness is not None:
        w = verdict.witness
        what = w.obstruction or "self-intersection"
        detail = f" (witness: {what} = {frac_str(w.value)})"
    else:
        detail = ""
    payload = {"query": query.to_dict(), "context": context.to_dict(),
               "verdict": verdict.to_dict()}
    _emit(payload, as_json, f"{verdict.status}{detail}")
    ctx.exit(verdict.exit_code)


@main.group()
def catalog():
    """Inspect the generator/obstruction catalog."""


@catalog.command(name="dump")
@click.option("--g", "g", type=int, required=True)
@click.option("--level", type=click.Choice(_LEVELS), default="arbitrary")
@click.option("--cover-degree", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def catalog_dump(ctx, g, level, cover_degree, as_json):
    """List every applicable generator with its exact instances."""
    context = _context(g, level, cover_degree)
    data = dump(context, _config(ctx))
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    lines = [f"catalog for genus {g}, level {level}"]
    for gen in data["generators"]:
        lines.append(f"- {gen['name']} [{gen['kind']}]")
        for inst in gen["instances"]:
            c = inst["class"]
            params = ", ".join(f"{k}={v}" for k, v in inst["params"].items())
            suffix = f"  ({params})" if params else ""
            lines.append(f"    ({c['a']}, {c['b']}, {c['c']}){suffix}")
    lines.append("obstructions:")
    for ob in data["obstructions"]:
        c = ob["class"]
        lines.append(f"- {ob['name']}: ({c['a']}, {c['b']}, {c['c']})")
    click.echo("\n".join(lines))


@main.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--level", type=click.Choice(_LEVELS), default="arbitrary")
@click.option("--cover-degree", type=int, default=None)
@click.option("--a-min", default="2", help="Exact rational.")
@click.option("--a-max", default="12", help="Exact rational.")
@click.option("--step", default="1", help="Exact rational.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def boundary(ctx, g, level, cover_degree, a_min, a_max, step, as_json):
    """Certified lower envelope on the a f1 + b f2 - delta slice (CSV)."""
    context = _context(g, level, cover_degree)
    lo, hi, st = _rational(a_min), _rational(a_max), _rational(step)
    try:
        samples = boundary_samples(context, lo, hi, st, _config(ctx))
    except ValueError as exc:
        _fail(str(exc))
    if as_json:
        click.echo(json.dumps(
            {"context": context.to_dict(),
             "samples": [{"a": frac_str(a), "b": frac_str(b)} for a, b in samples]},
            indent=2))
        return
    click.echo("a,b")
    for a, b in samples:
        click.echo(f"{frac_str(a)},{frac_str(b)}")


@main.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--level", "levels", type=click.Choice(_LEVELS), multiple=True,
              default=("arbitrary",), help="Repeatable; one envelope per level.")
@click.option("--cover-degree", type=int, default=None)
@click.option("--a-min", default="2")
@click.option("--a-max", default="12")
@click.option("--step", default="1")
@click.option("--format", "fmt", type=click.Choice(["csv", "svg"]), default="csv")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Output path (stdout when omitted).")
@click.option("--no-conjectural", is_flag=True, help="Drop the conjectural boundary.")
@click.option("--no-vojta", is_flag=True)
@click.option("--no-jacobian", is_flag=True)
@click.option("--no-tangent", is_flag=True)
@click.option("--no-points", is_flag=True, help="Drop catalog instance points.")
@click.pass_context
def plot(ctx, g, levels, cover_degree, a_min, a_max, step, fmt, out,
         no_conjectural, no_vojta, no_jacobian, no_tangent, no_points):
    """Reproduce a nef-region figure as CSV (exact) or SVG (visual)."""
    contexts = tuple(_context(g, lv, cover_degree) for lv in levels)
    overlays = Overlays(
        conjectural_boundary=not no_conjectural,
        vojta=not no_vojta,
        jacobian=not no_jacobian,
        tangent_segment=not no_tangent,
        catalog_points=not no_points,
    )
    try:
        spec = PlotSpec(g, contexts, _rational(a_min), _rational(a_max),
                        _rational(step), overlays, fmt)
        content = render(spec, _config(ctx))
    except ValueError as exc:
        _fail(str(exc))
    if out is None:
        click.echo(content, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(content)
        click.echo(f"wrote {out}")


@main.group()
def cremona():
    """Cremona moves on blown-up rational surfaces."""


@cremona.command(name="reduce")
@click.option("--g", "g", type=int, required=True)
@click.option("--base", type=click.Choice([P1XP1, P2]), default=P1XP1)
@click.option("--json", "as_json", is_flag=True)
def cremona_reduce(g, base, as_json):
    """Reduce the symmetric interpolation class, step by step."""
    try:
        reduction = reduce_symmetric_class(g, base)
    except (ValueError, ArithmeticError) as exc:
        _fail(str(exc))
    if as_json:
        click.echo(json.dumps(reduction.to_dict(), indent=2))
        return

    def fmt(checksum):
        return "(" + ", ".join(frac_str(v) for v in checksum) + ")"

    lines = [f"start: {reduction.start!r}  checksum {fmt(reduction.start.checksum())}"]
    for i, step in enumerate(reduction.steps, start=1):
        lines.append(f"step {i}: {step.operation}{step.centers} -> "
                     f"{step.result!r}  checksum {fmt(step.checksum)}")
    lines.append(f"final: {reduction.final!r} in {len(reduction.steps)} steps")
    click.echo("\n".join(lines))


@main.group()
def interp():
    """Interpolation dimension checks."""


@interp.command(name="verify")
@click.option("--max-n", type=int, default=5)
@click.option("--max-m", type=int, default=None, help="Default: n + 2 per row.")
@click.option("--max-r", type=int, default=2)
@click.option("--field", type=click.Choice(["gf", "qq"]), default="gf")
@click.option("--prime", type=int, default=DEFAULT_PRIME)
@click.option("--seed", type=int, default=0)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def interp_verify(ctx, max_n, max_m, max_r, field, prime, seed, as_json):
    """Sampled vs predicted dimensions over a grid; exit 1 on mismatch."""
    try:
        cells = verify_lemma(max_n, max_m, max_r, field=field, prime=prime, seed=seed)
    except (ValueError, RuntimeError) as exc:
        _fail(str(exc))
    mismatches = [c for c in cells if not c.match]
    if as_json:
        click.echo(json.dumps({"cells": [c.to_dict() for c in cells],
                               "mismatches": len(mismatches)}, indent=2))
    else:
        for c in mismatches:
            click.echo(f"mismatch at (n={c.n}, m={c.m}, r={c.r}): "
                       f"expected {c.expected}, sampled {c.sampled}")
        click.echo(f"{len(cells)} cells checked over {field}, "
                   f"{len(mismatches)} mismatches")
    ctx.exit(0 if not mismatches else 1)


@main.group()
def slope():
    """Closed-form slope queries."""


@slope.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--a", "a", required=True, help="Exact rational.")
@click.option("--n", "n", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def conormal(g, a, n, as_json):
    """Slope of the n-th kernel-type bundle, plus its normalized value."""
    a_val = _rational(a)
    try:
        value = higher_conormal_slope(g, a_val, n)
        limit = conormal_limit(g, a_val) if a_val > 1 else None
    except ValueError as exc:
        _fail(str(exc))
    payload = {"g": g, "a": frac_str(a_val), "n": n, "slope": frac_str(value),
               "normalized": frac_str(value / n)}
    if limit is not None:
        payload["limit"] = frac_str(limit)
    _emit(payload, as_json,
          f"slope {frac_str(value)}  normalized {frac_str(value / n)}"
          + (f"  limit {frac_str(limit)}" if limit is not None else ""))


@slope.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--a", "a", required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def tbundle(g, a, n, as_json):
    """Normalized tangent-side slope at finite n."""
    a_val = _rational(a)
    try:
        value = t_bundle_normalized_slope(g, a_val, n)
        limit = t_bundle_limit(g, a_val) if a_val < 1 else None
    except ValueError as exc:
        _fail(str(exc))
    payload = {"g": g, "a": frac_str(a_val), "n": n, "normalized": frac_str(value)}
    if limit is not None:
        payload["limit"] = frac_str(limit)
    _emit(payload, as_json, f"normalized {frac_str(value)}"
          + (f"  limit {frac_str(limit)}" if limit is not None else ""))


@slope.command()
@click.option("--g", "g", type=int, required=True)
@click.option("--a", "a", required=True)
@click.option("--json", "as_json", is_flag=True)
def limit(g, a, as_json):
    """Asymptotic normalized slope limit at this a (conormal or tangent side)."""
    a_val = _rational(a)
    try:
        value = asymptotic_limit(g, a_val)
    except ValueError as exc:
        _fail(str(exc))
    side = "conormal" if a_val > 1 else "tbundle"
    _emit({"g": g, "a": frac_str(a_val), "side": side, "limit": frac_str(value)},
          as_json, f"{side} limit {frac_str(value)}")


@slope.command()
@click.option("--rank", type=int, required=True)
@click.option("--degree", required=True, help="Exact rational, twist included.")
@click.option("--mu-min", "mu_min", required=True, help="Exact rational.")
@click.option("--alpha", required=True, help="Coefficient of xi.")
@click.option("--beta", required=True, help="Coefficient of the fiber.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def pbundle(ctx, rank, degree, mu_min, alpha, beta, as_json):
    """Nefness of alpha*xi + beta*f on the projectivized bundle; exit 0/1."""
    try:
        bundle = TwistedBundleData(rank, _rational(degree), _rational(mu_min))
        verdict = projective_bundle_nef(bundle, (_rational(alpha), _rational(beta)))
    except ValueError as exc:
        _fail(str(exc))
    _emit({"bundle": bundle.to_dict(), "alpha": alpha, "beta": beta, "nef": verdict},
          as_json, "nef" if verdict else "not nef")
    ctx.exit(0 if verdict else 1)


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of factors.")
@click.option("--g", "g", type=int, default=None,
              help="With --d: lift the distinguished theorem class.")
@click.option("--d", "d", type=int, default=None)
@click.option("--coeff-f", default=None, help="Exact rational.")
@click.option("--coeff-qx", default=None)
@click.option("--coeff-qdelta-half", default=None)
@click.option("--coeff-z", default=None)
@click.option("--json", "as_json", is_flag=True)
def lift(n, g, d, coeff_f, coeff_qx, coeff_qdelta_half, coeff_z, as_json):
    """Lift a mixed class from C x C_(n-1) conventions to N^1(C^n)."""
    manual = [coeff_f, coeff_qx, coeff_qdelta_half, coeff_z]
    if g is not None and d is not None:
        if any(v is not None for v in manual):
            _fail("give either --g/--d or the four --coeff options, not both")
        try:
            mixed = mainCn_class(g, n, d)
            clause = mainCn_condition(g, n, d)
        except ValueError as exc:
            _fail(str(exc))
    elif all(v is not None for v in manual):
        mixed = MixedClass(*[_rational(v) for v in manual])
        clause = None
    else:
        _fail("need --g and --d, or all four --coeff options")
    try:
        lifted = lift_to_Cn(mixed, n)
    except ValueError as exc:
        _fail(str(exc))
    payload = {"mixed": mixed.to_dict(), "n": n, "lifted": lifted.to_dict()}
    if clause is not None:
        payload["clause"] = clause.value
        payload["certified"] = clause is not MainCnClause.NOT_APPLICABLE
    human = json.dumps(payload["lifted"])
    if clause is not None:
        human += f"  [{clause.value}]"
    _emit(payload, as_json, human)


if __name__ == "__main__":
    main()
