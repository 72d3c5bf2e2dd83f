"""Slope bookkeeping for (twisted) bundles on a smooth curve.

Everything here is closed-form arithmetic: ranks, degrees and slopes of
kernel bundles of line bundles, their higher-order relatives, and bundles of
principal parts, plus the two asymptotic slope limits and Barton's
description of the nef cone of a projectivized bundle over a curve.

Semistability itself is never computed.  Where a slope record carries
`mu_min`, that value was asserted by the caller on the strength of a known
semistability statement; this module only propagates it.  Characteristic 0
throughout, so no Frobenius-closure subtleties arise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .exact import Rational, as_fraction, frac_str
from .neronseveri import MixedClass

__all__ = [
    "TwistedBundleData",
    "slope",
    "tensor_data",
    "twist_data",
    "kernel_bundle_data",
    "higher_conormal_slope",
    "principal_parts_data",
    "t_bundle_normalized_slope",
    "conormal_limit",
    "t_bundle_limit",
    "asymptotic_limit",
    "projective_bundle_nef",
    "exterior_power_slope",
    "exterior_power_data",
    "MainCnClause",
    "mainCn_condition",
    "mainCn_class",
    "is_superadditive",
    "fekete_lower_bound",
]


@dataclass(frozen=True)
class TwistedBundleData:
    """(rank, degree) of a bundle, degree including any rational twist.

    mu_min, when present, is the smallest quotient slope; equal to the slope
    itself exactly for semistable bundles.
    """

    rank: int
    degree: Fraction
    mu_min: Fraction | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        object.__setattr__(self, "degree", as_fraction(self.degree))
        if self.mu_min is not None:
            object.__setattr__(self, "mu_min", as_fraction(self.mu_min))

    @property
    def slope(self) -> Fraction:
        return self.degree / self.rank

    def to_dict(self) -> dict:
        out: dict = {"rank": self.rank, "degree": frac_str(self.degree),
                     "slope": frac_str(self.slope)}
        if self.mu_min is not None:
            out["mu_min"] = frac_str(self.mu_min)
        return out


def slope(bundle: TwistedBundleData) -> Fraction:
    return bundle.slope


def tensor_data(left: TwistedBundleData, right: TwistedBundleData) -> TwistedBundleData:
    """Tensor product bookkeeping; slopes add."""
    return TwistedBundleData(
        left.rank * right.rank,
        left.degree * right.rank + right.degree * left.rank)


def twist_data(bundle: TwistedBundleData, twist_degree: Rational) -> TwistedBundleData:
    """Formal twist by a rational divisor class: every slope shifts equally."""
    t = as_fraction(twist_degree)
    mu = None if bundle.mu_min is None else bundle.mu_min + t
    return TwistedBundleData(bundle.rank, bundle.degree + bundle.rank * t, mu)


def kernel_bundle_data(g: int, d: int, h1: int, *,
                       semistable: bool = False) -> TwistedBundleData:
    """Kernel of the evaluation map of a degree-d line bundle with h^1 = h1.

    rank = d - g + h1, degree = -d.  Pass semistable=True only when a
    semistability statement covers the case; then mu_min = slope is recorded.
    """
    if d < 1:
        raise ValueError("line bundle degree must be >= 1")
    rank = d - g + h1
    if rank < 1:
        raise ValueError(f"kernel bundle rank {rank} is not positive")
    mu_min = Fraction(-d, rank) if semistable else None
    return TwistedBundleData(rank, Fraction(-d), mu_min)


def higher_conormal_slope(g: int, a: Rational, n: int) -> Fraction:
    """Slope of the n-th kernel-type bundle attached to a degree-(n a)
    system: degree -(n^2 a + n(n-1)(g-1)) over rank n a + 1 - g - n."""
    a = as_fraction(a)
    if n < 1:
        raise ValueError("n must be >= 1")
    rank = n * a + 1 - g - n
    if rank < 1:
        raise ValueError(f"rank {rank} is not positive; formula out of range")
    degree = -(n * n * a + n * (n - 1) * (g - 1))
    return degree / rank


def principal_parts_data(g: int, deg_l: Rational, n: int) -> TwistedBundleData:
    """Bundle of (n-1)-jets of a line bundle of degree deg_l: its filtration
    has quotients of degrees deg_l, deg_l + (2g-2), ..., deg_l + (n-1)(2g-2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    deg_l = as_fraction(deg_l)
    return TwistedBundleData(n, n * deg_l + comb(n, 2) * (2 * g - 2))


def t_bundle_normalized_slope(g: int, a: Rational, n: int) -> Fraction:
    """(1/n) times the slope of the tangent-side comparison bundle:
    (-n^2 a - binom(n+1, 2)(2g-2)) / (n^2 (1-a) + n (1-g))."""
    a = as_fraction(a)
    if n < 1:
        raise ValueError("n must be >= 1")
    denominator = n * n * (1 - a) + n * (1 - g)
    if denominator <= 0:
        raise ValueError("denominator not positive; need larger n or a < 1")
    numerator = -(n * n * a) - comb(n + 1, 2) * (2 * g - 2)
    return numerator / denominator


def conormal_limit(g: int, a: Rational) -> Fraction:
    """Limit of higher_conormal_slope(g, a, n)/n as n grows; needs a > 1."""
    a = as_fraction(a)
    if a <= 1:
        raise ValueError("conormal limit needs a > 1")
    return -(1 + Fraction(g, 1) / (a - 1))


def t_bundle_limit(g: int, a: Rational) -> Fraction:
    """Limit of t_bundle_normalized_slope(g, a, n) as n grows; needs a < 1."""
    a = as_fraction(a)
    if a >= 1:
        raise ValueError("t-bundle limit needs a < 1")
    return -(Fraction(g, 1) / (1 - a) - 1)


def asymptotic_limit(g: int, a: Rational) -> Fraction:
    """The applicable limit at this a: conormal side for a > 1, tangent side
    for a < 1 (at a = 1 neither normalized sequence converges)."""
    a = as_fraction(a)
    if a > 1:
        return conormal_limit(g, a)
    if a < 1:
        return t_bundle_limit(g, a)
    raise ValueError("no asymptotic slope limit at a = 1")


def projective_bundle_nef(bundle: TwistedBundleData,
                          query: tuple[Rational, Rational]) -> bool:
    """Is alpha*xi + beta*fiber nef on the projectivization over the curve?

    True iff alpha >= 0 and beta >= -alpha * mu_min.  In particular the
    bundle itself is nef iff mu_min >= 0.
    """
    if bundle.mu_min is None:
        raise ValueError("projective_bundle_nef needs mu_min on the bundle data")
    alpha, beta = (as_fraction(v) for v in query)
    return alpha >= 0 and beta >= -alpha * bundle.mu_min


def exterior_power_slope(bundle: TwistedBundleData, k: int) -> Fraction:
    """Slope of the k-th exterior power of a semistable bundle: k * slope."""
    if not 1 <= k <= bundle.rank:
        raise ValueError(f"k must lie in [1, {bundle.rank}]")
    return k * bundle.slope


def exterior_power_data(bundle: TwistedBundleData, k: int) -> TwistedBundleData:
    mu = exterior_power_slope(bundle, k)
    rank = comb(bundle.rank, k)
    mu_min = None if bundle.mu_min is None else (
        mu if bundle.mu_min == bundle.slope else None)
    return TwistedBundleData(rank, mu * rank, mu_min)


class MainCnClause(Enum):
    CLAUSE_I = "Clause_i"
    CLAUSE_II = "Clause_ii"
    NOT_APPLICABLE = "NotApplicable"


def mainCn_condition(g: int, n: int, d: int) -> MainCnClause:
    """First applicable nefness clause for the distinguished class on C^n.

    Clause_i: d >= 2g + n, or d >= max(2n + g, 2g).
    Clause_ii: n >= 2g and d >= g + n - 1.
    """
    if g < 1 or n < 2:
        raise ValueError("need g >= 1 and n >= 2")
    if d >= 2 * g + n or d >= max(2 * n + g, 2 * g):
        return MainCnClause.CLAUSE_I
    if n >= 2 * g and d >= g + n - 1:
        return MainCnClause.CLAUSE_II
    return MainCnClause.NOT_APPLICABLE


def mainCn_class(g: int, n: int, d: int) -> MixedClass:
    """The mixed class ((n-1)d/(d-g)) f + d q*x - q*(delta/2) - z whose
    nefness the two clauses certify; defined whenever d > g."""
    if d <= g:
        raise ValueError("need d > g")
    return MixedClass(Fraction((n - 1) * d, d - g), Fraction(d),
                      Fraction(-1), Fraction(-1))


def is_superadditive(values) -> bool:
    """a[i+j] >= a[i] + a[j] for all valid 1-based indices (Fekete-style)."""
    a = [as_fraction(v) for v in values]
    size = len(a)
    for i in range(1, size + 1):
        for j in range(i, size + 1 - i):
            if a[i + j - 1] < a[i - 1] + a[j - 1]:
                return False
    return True


def fekete_lower_bound(values) -> Fraction:
    """max a_n / n — for a superadditive sequence this bounds (and in the
    limit equals) lim a_n / n."""
    a = [as_fraction(v) for v in values]
    if not a:
        raise ValueError("empty sequence")
    return max(v / (i + 1) for i, v in enumerate(a))
