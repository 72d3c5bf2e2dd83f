"""Release gates: one test per numbered criterion, each printing a PASS line.

Run `pytest -v -s tests/test_acceptance.py` to see the per-criterion lines.
Everything is exact rational arithmetic; the only tolerances are the wall
clock budgets stated inline.
"""

import random
import time
from fractions import Fraction
from itertools import product

from neflab.catalog import Generality, GenusContext, instance_points
from neflab.certifier import NEF, NOT_NEF, UNKNOWN, certify, replay
from neflab.config import NeflabConfig
from neflab.cremona import (
    P1XP1,
    P2,
    BlowupClass,
    cremona_p1xp1,
    reduce_symmetric_class,
)
from neflab.interpolation import verify_lemma
from neflab.neronseveri import (
    CnClass,
    SurfaceClass,
    lift_to_Cn,
    pair,
    self_intersection,
    swap,
)
from neflab.plotting import PlotSpec, render_csv
from neflab.slopes import (
    conormal_limit,
    higher_conormal_slope,
    mainCn_class,
    principal_parts_data,
    t_bundle_limit,
    t_bundle_normalized_slope,
)

CHAIN = (Generality.ARBITRARY, Generality.GENERAL, Generality.VERY_GENERAL)


def _report(number: int, label: str, detail: str = ""):
    suffix = f" — {detail}" if detail else ""
    print(f"criterion {number} ({label}): PASS{suffix}")


def test_criterion_1_figure_one_rows():
    t0 = time.perf_counter()
    spec = PlotSpec(10, (GenusContext(10, Generality.ARBITRARY),),
                    Fraction(2), Fraction(20), Fraction(1))
    text = render_csv(spec)
    elapsed = time.perf_counter() - t0
    assert "vojta,2,20,certified\n" in text
    assert "vojta_mirror,20,2,certified\n" in text
    assert "jacobian,2,101,certified\n" in text
    assert elapsed < 1.0
    _report(1, "figure-1 rows, g=10 arbitrary", f"{elapsed:.3f}s < 1s")


def test_criterion_2_catalog_points():
    vg = {(cls.a, cls.b) for _, cls in
          instance_points(GenusContext(10, Generality.VERY_GENERAL)) if cls.c == -1}
    gen = {(cls.a, cls.b) for _, cls in
           instance_points(GenusContext(10, Generality.GENERAL)) if cls.c == -1}
    assert (2, 11) in vg
    assert {(16, Fraction(8, 3)), (18, 2), (12, 3)} <= gen
    assert {(3, 9), (4, Fraction(14, 3))} <= vg  # cover-region corners
    _report(2, "figure-2/3 catalog points, g=10",
            "(2,11), (16,8/3), (18,2), (12,3), (3,9), (4,14/3)")


def _p1xp1_basis(points: int) -> list[BlowupClass]:
    zero = (Fraction(0),) * points
    basis = [BlowupClass.on_p1xp1(1, 0, zero), BlowupClass.on_p1xp1(0, 1, zero)]
    for i in range(points):
        exc = [Fraction(0)] * points
        exc[i] = Fraction(1)
        basis.append(BlowupClass.on_p1xp1(0, 0, tuple(exc)))
    return basis


def test_criterion_3_cremona_suite():
    t0 = time.perf_counter()
    target = (Fraction(0), Fraction(-2))
    for g in range(1, 65):
        red = reduce_symmetric_class(g, P1XP1)
        assert len(red.steps) == g
        assert red.final.degrees == (1, 0)
        assert all(v == 0 for v in red.final.exceptional)
        previous = red.start
        for step in red.steps:
            assert step.checksum == target
            # the move is an involution: applying it again undoes the step
            assert cremona_p1xp1(step.result, *step.centers) == previous
            previous = step.result
        # full matrix check on the first move: M.M = I on a lattice basis,
        # and the intersection form is preserved entry by entry
        if g <= 12 or g in (16, 24, 32, 48, 64):
            basis = _p1xp1_basis(2 * g)
            images = [cremona_p1xp1(e, 1, 2) for e in basis]
            assert [cremona_p1xp1(v, 1, 2) for v in images] == basis
            if g <= 12:
                for x in range(len(basis)):
                    for y in range(x, len(basis)):
                        assert images[x].dot(images[y]) == basis[x].dot(basis[y])
    for g in range(2, 65):
        red = reduce_symmetric_class(g, P2)
        assert len(red.steps) == g - 1
        assert red.final.degrees == (1,)
        tail = [Fraction(0)] * (2 * g - 1) + [Fraction(-1)]
        assert list(red.final.exceptional) == tail  # H - E_{2g}
        assert all(step.checksum == target for step in red.steps)
    elapsed = time.perf_counter() - t0
    assert elapsed < 2.0
    _report(3, "Cremona reductions, g in [1,64] / [2,64]", f"{elapsed:.2f}s < 2s")


def test_criterion_4_interpolation_suite():
    t0 = time.perf_counter()
    matches: dict[tuple[int, int, int], int] = {}
    exceptional = []
    for seed in range(10):
        for cell in verify_lemma(field="gf", seed=seed):
            assert cell.sampled >= cell.expected, (cell, seed)
            key = (cell.n, cell.m, cell.r)
            matches[key] = matches.get(key, 0) + cell.match
            if key == (1, 2, 0):
                exceptional.append(cell.sampled)
    assert all(count >= 9 for count in matches.values())
    assert exceptional == [0] * 10
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _report(4, "interpolation dimensions over GF(32003)",
            f"{len(matches)} cells x 10 seeds, {elapsed:.2f}s < 5s")


def test_criterion_5_slope_oracle_equivalence():
    cases = 0
    for g in range(2, 11):
        for a in range(g + 1, g + 13):
            for n in range(1, 21):
                rank = n * a + 1 - g - n
                if rank < 1:
                    continue
                jets = principal_parts_data(g, n * a, n)
                assert higher_conormal_slope(g, a, n) == -jets.degree / rank
                cases += 1
    assert cases == 2160
    assert t_bundle_normalized_slope(2, 0, 4) == Fraction(-5, 3)
    assert t_bundle_normalized_slope(2, 0, 10) == Fraction(-11, 9)
    steps = (4, 8, 16, 32)
    for g, a in [(2, 3), (2, 7), (5, 8), (10, 13)]:
        limit = conormal_limit(g, a)
        errors = [abs(higher_conormal_slope(g, a, n) / n - limit) for n in steps]
        assert all(x > y for x, y in zip(errors, errors[1:]))
    for g, a in [(2, 0), (2, Fraction(1, 2)), (3, -1), (5, -2)]:
        limit = t_bundle_limit(g, a)
        errors = [abs(t_bundle_normalized_slope(g, a, n) - limit) for n in steps]
        assert all(x > y for x, y in zip(errors, errors[1:]))
    _report(5, "slope oracle equivalence + limits", f"{cases} closed-form cases")


def _random_class(rng: random.Random, g: int) -> SurfaceClass:
    def coeff(lo: int, hi: int) -> Fraction:
        if rng.random() < 0.25:
            return Fraction(rng.randint(2 * lo, 2 * hi), rng.choice((2, 3)))
        return Fraction(rng.randint(lo, hi))

    return SurfaceClass(coeff(-3, 2 * g + 4), coeff(-3, 2 * g + 4), coeff(-3, 3))


def test_criterion_6_certifier_property_suite():
    rng = random.Random(20260815)
    scales = (Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3))
    totals = {"replay": 0, "scale": 0, "swap": 0, "chain": 0, "dominance": 0}
    for g in range(2, 21):
        contexts = [GenusContext(g, lv) for lv in CHAIN]
        contexts.append(GenusContext(g, Generality.SIMPLE_COVER, 2))
        classes = [_random_class(rng, g) for _ in range(1000)]
        status: dict[tuple[Generality, int], str] = {}
        for ctx in contexts:
            for idx, D in enumerate(classes):
                verdict = certify(D, ctx)
                assert replay(verdict, D, ctx), (g, ctx.level, D)
                status[(ctx.level, idx)] = verdict.status
                totals["replay"] += 1
        for idx, D in enumerate(classes):
            ctx = contexts[idx % len(contexts)]
            base = status[(ctx.level, idx)]
            lam = scales[idx % len(scales)]
            assert certify(D.scale(lam), ctx).status == base, (g, ctx.level, D, lam)
            totals["scale"] += 1
            assert certify(swap(D), ctx).status == base, (g, ctx.level, D)
            totals["swap"] += 1
        for idx in range(1000):
            arb = status[(Generality.ARBITRARY, idx)]
            gnl = status[(Generality.GENERAL, idx)]
            vgn = status[(Generality.VERY_GENERAL, idx)]
            cov = status[(Generality.SIMPLE_COVER, idx)]
            for weaker, stronger in ((arb, gnl), (gnl, vgn), (arb, cov)):
                if weaker == NEF:
                    assert stronger == NEF
                if weaker == NOT_NEF or stronger == NOT_NEF:
                    assert NEF not in (weaker, stronger)  # zero contradictions
                totals["chain"] += 1
        for idx in range(0, 1000, 7):
            for ctx in (contexts[0], contexts[2]):
                if status[(ctx.level, idx)] != NEF:
                    continue
                D = classes[idx]
                bumped = SurfaceClass(D.a + rng.randint(0, 3),
                                      D.b + Fraction(rng.randint(0, 6), 2), D.c)
                assert certify(bumped, ctx).status == NEF, (g, ctx.level, D, bumped)
                totals["dominance"] += 1
    assert totals["replay"] == 19 * 4 * 1000
    _report(6, "certifier property suite, g in [2,20]",
            ", ".join(f"{k}={v}" for k, v in totals.items()))


def _enumerated_conditions(g: int) -> list[SurfaceClass]:
    """Integer classes in a box that every nef class must meet nonnegatively:
    nonzero, nonnegative square, positive against a fixed positive class."""
    ample = SurfaceClass(1, 1, 1)
    out = []
    for x, y, z in product(range(-3, 4), repeat=3):
        E = SurfaceClass(x, y, z)
        if (not E.is_zero() and self_intersection(E, g) >= 0
                and pair(E, ample, g) > 0):
            out.append(E)
    return out


def test_criterion_7_pinned_verdicts_and_low_genus():
    vg10 = GenusContext(10, Generality.VERY_GENERAL)
    assert certify(SurfaceClass(2, 11, -1), vg10).status == NEF
    levels = [GenusContext(2, lv) for lv in CHAIN]
    levels.append(GenusContext(2, Generality.SIMPLE_COVER, 2))
    for ctx in levels:
        verdict = certify(SurfaceClass(2, 3, -1), ctx)
        assert verdict.status == NOT_NEF
        assert verdict.witness.value == -1
    assert certify(SurfaceClass(3, 6, -1), vg10).status == UNKNOWN

    rng = random.Random(7)
    checked = 0
    for g in (0, 1):
        ctx = GenusContext(g, Generality.ARBITRARY)
        conditions = _enumerated_conditions(g)
        for _ in range(5000):
            D = SurfaceClass(Fraction(rng.randint(-18, 18), rng.randint(1, 3)),
                             Fraction(rng.randint(-18, 18), rng.randint(1, 3)),
                             Fraction(rng.randint(-18, 18), rng.randint(1, 3)))
            nef_by_enumeration = (
                self_intersection(D, g) >= 0
                and all(pair(D, E, g) >= 0 for E in conditions))
            expected = NEF if nef_by_enumeration else NOT_NEF
            assert certify(D, ctx).status == expected, (g, D)
            checked += 1
    _report(7, "pinned verdicts + exhaustive low genus",
            f"{checked} random classes vs brute-force enumeration")


def test_criterion_8_lift_identity_and_catalog_soundness():
    identities = 0
    for n in range(2, 9):
        for g in (2, 3, 5, 8):
            for numerator in range(1, 61):
                d = g + Fraction(numerator, 3)  # sweeps (g, g+20]
                lifted = lift_to_Cn(mainCn_class(g, n, d), n)
                f = [Fraction((n - 1) * d, d - g)] + [Fraction(d)] * (n - 1)
                delta = {(i, j): Fraction(-1)
                         for i in range(2, n + 1) for j in range(i + 1, n + 1)}
                for i in range(2, n + 1):
                    delta[(1, i)] = Fraction(-1)
                assert lifted == CnClass(n, f, delta)
                identities += 1
    assert identities == 7 * 4 * 60

    dense = NeflabConfig(family_samples=12)
    pairings = 0
    for g in range(2, 31):
        contexts = [GenusContext(g, lv) for lv in CHAIN]
        contexts.append(GenusContext(g, Generality.SIMPLE_COVER, 2))
        for ctx in contexts:
            classes = [cls for _, cls in instance_points(ctx, dense)]
            for i, X in enumerate(classes):
                for Y in classes[i:]:
                    assert pair(X, Y, g) >= 0, (g, ctx.level, X, Y)
                    pairings += 1
    _report(8, "lift identity + catalog mutual nonnegativity",
            f"{identities} lift identities, {pairings} pairings >= 0")
