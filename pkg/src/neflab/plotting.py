"""Nef-region figures on the a f1 + b f2 - delta slice: CSV and SVG.

The CSV is the normative artifact: long-format rows (family, a, b, status)
with exact rational coordinates, byte-stable for a fixed spec.  Certified
rows correspond to classes the certifier accepts; the conjectural boundary
b = 1 + g/(a-1) is always emitted with status "conjectural" and rendered
dashed.  The SVG is a best-effort visual of the same rows (floating-point
coordinates are fine there).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .catalog import (
    GenusContext,
    JacobianRestrictionFamily,
    VojtaRabindranathFamily,
    boundary_samples,
    instance_points,
)
from .config import DEFAULT_CONFIG, NeflabConfig
from .exact import Rational, as_fraction, frac_str

__all__ = ["Overlays", "PlotSpec", "PlotRow", "plot_rows", "render_csv",
           "render_svg", "render", "write_plot"]

CERTIFIED = "certified"
CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class Overlays:
    conjectural_boundary: bool = True
    vojta: bool = True
    jacobian: bool = True
    tangent_segment: bool = True
    catalog_points: bool = True


@dataclass(frozen=True)
class PlotSpec:
    g: int
    contexts: tuple[GenusContext, ...]
    a_min: Fraction
    a_max: Fraction
    step: Fraction
    overlays: Overlays = field(default_factory=Overlays)
    output: str = "csv"

    def __post_init__(self):
        object.__setattr__(self, "a_min", as_fraction(self.a_min))
        object.__setattr__(self, "a_max", as_fraction(self.a_max))
        object.__setattr__(self, "step", as_fraction(self.step))
        object.__setattr__(self, "contexts", tuple(self.contexts))
        if self.a_min <= 1:
            raise ValueError("plot range must stay above a = 1")
        if self.a_max < self.a_min or self.step <= 0:
            raise ValueError("bad a range or step")
        if self.output not in ("csv", "svg"):
            raise ValueError("output must be 'csv' or 'svg'")
        for ctx in self.contexts:
            if ctx.g != self.g:
                raise ValueError("all plot contexts must share the figure genus")


class PlotRow(NamedTuple):
    family: str
    a: Fraction
    b: Fraction
    status: str


def _grid(spec: PlotSpec) -> list[Fraction]:
    out = []
    a = spec.a_min
    while a <= spec.a_max:
        out.append(a)
        a += spec.step
    return out


def _curve_rows(name: str, values: list[tuple[Fraction, Fraction]],
                mirrored: bool) -> list[PlotRow]:
    rows = [PlotRow(name, a, b, CERTIFIED) for a, b in values]
    if mirrored:
        rows += [PlotRow(f"{name}_mirror", b, a, CERTIFIED) for a, b in values]
    return rows


def plot_rows(spec: PlotSpec, config: NeflabConfig = DEFAULT_CONFIG) -> list[PlotRow]:
    """All figure rows, in a fixed deterministic order."""
    g = spec.g
    grid = _grid(spec)
    rows: list[PlotRow] = []
    if spec.overlays.conjectural_boundary:
        rows += [PlotRow("conjectural_boundary", a, 1 + Fraction(g, 1) / (a - 1),
                         CONJECTURAL) for a in grid]
    if spec.overlays.vojta and g >= 1:
        vojta = VojtaRabindranathFamily(g)
        rows += _curve_rows("vojta", [(a, vojta.value_at(a)) for a in grid], True)
    if spec.overlays.jacobian and g >= 1:
        jac = JacobianRestrictionFamily(g)
        rows += _curve_rows("jacobian", [(a, jac.value_at(a)) for a in grid], True)
    if spec.overlays.tangent_segment and g >= 1:
        # chord between the Vojta point at a = 2 and its mirror; every point
        # on it is a convex combination of two certified classes
        v2 = Fraction(2 * g)
        rows.append(PlotRow("tangent_segment", Fraction(2), v2, CERTIFIED))
        rows.append(PlotRow("tangent_segment", v2, Fraction(2), CERTIFIED))
    for ctx in spec.contexts:
        name = f"boundary:{ctx.level.value}"
        for a, b in boundary_samples(ctx, spec.a_min, spec.a_max, spec.step, config):
            rows.append(PlotRow(name, a, b, CERTIFIED))
    if spec.overlays.catalog_points:
        for ctx in spec.contexts:
            for gen_name, cls in instance_points(ctx, config):
                if cls.c == -1:
                    rows.append(PlotRow(f"catalog:{ctx.level.value}:{gen_name}",
                                        cls.a, cls.b, CERTIFIED))
    return rows


def render_csv(spec: PlotSpec, config: NeflabConfig = DEFAULT_CONFIG) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "a", "b", "status"])
    for row in plot_rows(spec, config):
        writer.writerow([row.family, frac_str(row.a), frac_str(row.b), row.status])
    return buf.getvalue()


_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"]
_WIDTH, _HEIGHT, _MARGIN = 640, 480, 56


def _y_ceiling(rows: list[PlotRow]) -> Fraction:
    anchored = [r.b for r in rows if r.status == CERTIFIED
                and not r.family.startswith(("vojta", "jacobian"))]
    pool = anchored or [r.b for r in rows]
    top = max(pool) if pool else Fraction(1)
    return max(top * Fraction(21, 20), Fraction(1))


def render_svg(spec: PlotSpec, config: NeflabConfig = DEFAULT_CONFIG) -> str:
    rows = plot_rows(spec, config)
    x_lo, x_hi = float(spec.a_min), float(max(spec.a_max, spec.a_min + 1))
    y_hi = float(_y_ceiling(rows))

    def sx(a: float) -> float:
        return _MARGIN + (a - x_lo) / (x_hi - x_lo) * (_WIDTH - 2 * _MARGIN)

    def sy(b: float) -> float:
        return _HEIGHT - _MARGIN - b / y_hi * (_HEIGHT - 2 * _MARGIN)

    families: dict[str, list[PlotRow]] = {}
    for row in rows:
        families.setdefault(row.family, []).append(row)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 12}" font-size="13">a</text>',
        f'<text x="14" y="{_HEIGHT // 2}" font-size="13">b</text>',
        f'<text x="{_MARGIN}" y="{_MARGIN - 16}" font-size="14">'
        f'nef region slice, genus {spec.g}</text>',
    ]
    legend_y = _MARGIN
    for idx, (family, frows) in enumerate(sorted(families.items())):
        color = _PALETTE[idx % len(_PALETTE)]
        conjectural = frows[0].status == CONJECTURAL
        dash = ' stroke-dasharray="6 4"' if conjectural else ""
        pts = [(float(r.a), float(r.b)) for r in frows
               if x_lo <= float(r.a) <= x_hi and float(r.b) <= y_hi * 1.0001]
        if family.startswith("catalog:"):
            for (ax, bx) in pts:
                parts.append(f'<circle cx="{sx(ax):.2f}" cy="{sy(bx):.2f}" '
                             f'r="3.5" fill="{color}"/>')
        elif len(pts) == 1:
            ax, bx = pts[0]
            parts.append(f'<circle cx="{sx(ax):.2f}" cy="{sy(bx):.2f}" '
                         f'r="3" fill="{color}"/>')
        elif pts:
            coords = " ".join(f"{sx(ax):.2f},{sy(bx):.2f}" for ax, bx in pts)
            parts.append(f'<polyline points="{coords}" fill="none" '
                         f'stroke="{color}" stroke-width="1.5"{dash}/>')
        suffix = " (conjectural)" if conjectural else ""
        parts.append(f'<text x="{_WIDTH - _MARGIN - 220}" y="{legend_y}" '
                     f'font-size="11" fill="{color}">{family}{suffix}</text>')
        legend_y += 14
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(spec: PlotSpec, config: NeflabConfig = DEFAULT_CONFIG) -> str:
    return render_csv(spec, config) if spec.output == "csv" else render_svg(spec, config)


def write_plot(spec: PlotSpec, path, config: NeflabConfig = DEFAULT_CONFIG) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render(spec, config))
