#!/usr/bin/env python3
"""Print the two normalized slope sequences converging to their limits.

One CSV table to stdout: for each n, the conormal-side normalized slope at
(g, a_conormal) and the tangent-side normalized slope at (g, a_tbundle),
each with its exact distance to the closed-form limit.
"""

import argparse
from fractions import Fraction

from neflab.exact import frac_str
from neflab.slopes import (
    conormal_limit,
    higher_conormal_slope,
    t_bundle_limit,
    t_bundle_normalized_slope,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--g", type=int, default=2)
    parser.add_argument("--a-conormal", default="3", help="exact rational > 1")
    parser.add_argument("--a-tbundle", default="0", help="exact rational < 1")
    parser.add_argument("--max-n", type=int, default=32)
    args = parser.parse_args()

    g = args.g
    ac, at = Fraction(args.a_conormal), Fraction(args.a_tbundle)
    lim_c, lim_t = conormal_limit(g, ac), t_bundle_limit(g, at)
    print(f"# g={g}, conormal a={frac_str(ac)} -> {frac_str(lim_c)}, "
          f"tbundle a={frac_str(at)} -> {frac_str(lim_t)}")
    print("n,conormal,conormal_gap,tbundle,tbundle_gap")
    for n in range(1, args.max_n + 1):
        cells = []
        if n * ac + 1 - g - n >= 1:
            v = higher_conormal_slope(g, ac, n) / n
            cells += [frac_str(v), frac_str(lim_c - v)]
        else:
            cells += ["", ""]
        if n * n * (1 - at) + n * (1 - g) > 0:
            w = t_bundle_normalized_slope(g, at, n)
            cells += [frac_str(w), frac_str(lim_t - w)]
        else:
            cells += ["", ""]
        print(f"{n}," + ",".join(cells))


if __name__ == "__main__":
    main()
