#!/usr/bin/env python3
"""Regenerate the three nef-region figures (CSV + SVG) for a chosen genus.

fig1: arbitrary-curve envelope with the Vojta / Jacobian-restriction overlays
fig2: very-general envelope with every catalog instance point
fig3: general + very-general envelopes side by side

The CSVs are exact and byte-stable; the SVGs are best-effort visuals.
"""

import argparse
from fractions import Fraction
from pathlib import Path

from neflab.catalog import Generality, GenusContext
from neflab.plotting import PlotSpec, render_csv, render_svg


def build_specs(g: int, a_max: Fraction, step: Fraction) -> dict[str, PlotSpec]:
    arb = GenusContext(g, Generality.ARBITRARY)
    gen = GenusContext(g, Generality.GENERAL)
    vgn = GenusContext(g, Generality.VERY_GENERAL)
    lo = Fraction(2)
    return {
        "fig1": PlotSpec(g, (arb,), lo, a_max, step),
        "fig2": PlotSpec(g, (vgn,), lo, a_max, step),
        "fig3": PlotSpec(g, (gen, vgn), lo, a_max, step),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--g", type=int, default=10, help="genus (default 10)")
    parser.add_argument("--a-max", default="20", help="right edge of the a range")
    parser.add_argument("--step", default="1/2", help="grid step, exact rational")
    parser.add_argument("--outdir", type=Path, default=Path("figures"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    specs = build_specs(args.g, Fraction(args.a_max), Fraction(args.step))
    for name, spec in specs.items():
        csv_path = args.outdir / f"{name}_g{args.g}.csv"
        svg_path = args.outdir / f"{name}_g{args.g}.svg"
        csv_path.write_text(render_csv(spec), encoding="utf-8")
        svg_path.write_text(render_svg(spec), encoding="utf-8")
        rows = render_csv(spec).count("\n") - 1
        print(f"{name}: {rows} rows -> {csv_path}, {svg_path}")


if __name__ == "__main__":
    main()
