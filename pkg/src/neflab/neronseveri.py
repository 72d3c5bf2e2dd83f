"""Exact intersection theory on self-products of a smooth projective curve.

For a curve C of genus g, numerical classes on the surface C x C are taken in
the span of the two fiber classes f1, f2 and the diagonal delta, with the
intersection pairing

    f1.f1 = f2.f2 = 0,   f1.f2 = 1,   delta.f1 = delta.f2 = 1,
    delta.delta = 2 - 2g.

On the n-fold product C^n (C very general, g >= 1) the relevant group has
dimension binom(n+1, 2), with basis the fiber classes f_i and the pairwise
diagonals delta_ij (i < j).  ``CnClass`` is an exact coefficient container for
that basis: lifts and pullbacks are implemented, the full intersection product
on C^n is deliberately out of scope here.

All coefficients are ``fractions.Fraction``; see ``exact.as_fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import Rational, as_fraction, frac_str

__all__ = [
    "SurfaceClass",
    "CnClass",
    "MixedClass",
    "pair",
    "self_intersection",
    "swap",
    "n1_dimension",
    "pullback_sum",
    "lift_to_Cn",
]


@dataclass(frozen=True)
class SurfaceClass:
    """a*f1 + b*f2 + c*delta on C x C, coefficients exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: Rational, b: Rational, c: Rational):
        object.__setattr__(self, "a", as_fraction(a))
        object.__setattr__(self, "b", as_fraction(b))
        object.__setattr__(self, "c", as_fraction(c))

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "SurfaceClass":
        return SurfaceClass(-self.a, -self.b, -self.c)

    def scale(self, t: Rational) -> "SurfaceClass":
        t = as_fraction(t)
        return SurfaceClass(t * self.a, t * self.b, t * self.c)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def to_dict(self) -> dict[str, str]:
        return {"a": frac_str(self.a), "b": frac_str(self.b), "c": frac_str(self.c)}

    @classmethod
    def from_dict(cls, data: dict) -> "SurfaceClass":
        try:
            return cls(data["a"], data["b"], data["c"])
        except KeyError as exc:
            raise ValueError(f"surface class JSON needs keys a,b,c: missing {exc}") from exc

    def __repr__(self) -> str:
        return f"SurfaceClass({frac_str(self.a)}, {frac_str(self.b)}, {frac_str(self.c)})"


F1 = SurfaceClass(1, 0, 0)
F2 = SurfaceClass(0, 1, 0)
DELTA = SurfaceClass(0, 0, 1)


def pair(D: SurfaceClass, E: SurfaceClass, g: int) -> Fraction:
    """Intersection number D.E on C x C for genus g.

    Bilinear extension of the Gram matrix of (f1, f2, delta); the only
    genus-dependent entry is delta.delta = 2 - 2g.
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    return (
        D.a * E.b
        + E.a * D.b
        + D.a * E.c
        + E.a * D.c
        + D.b * E.c
        + E.b * D.c
        + D.c * E.c * (2 - 2 * g)
    )


def self_intersection(D: SurfaceClass, g: int) -> Fraction:
    """D.D; for a*f1 + b*f2 - delta this is 2((a-1)(b-1) - g)."""
    return pair(D, D, g)


def swap(D: SurfaceClass) -> SurfaceClass:
    """Image under exchanging the two factors of C x C (f1 <-> f2)."""
    return SurfaceClass(D.b, D.a, D.c)


def n1_dimension(n: int) -> int:
    """Dimension binom(n+1, 2) of the span of {f_i} + {delta_ij} on C^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return comb(n + 1, 2)


def _delta_key(i: int, j: int, n: int) -> tuple[int, int]:
    if not (1 <= i < j <= n):
        raise ValueError(f"diagonal index pair out of range: ({i},{j}) with n={n}")
    return (i, j)


@dataclass(frozen=True)
class CnClass:
    """sum a_i f_i + sum c_ij delta_ij on C^n (1-indexed, i < j).

    Coefficient container only: addition, scaling, pullbacks and lifts are
    exact; the intersection product on C^n is not implemented.
    """

    n: int
    f: tuple[Fraction, ...]
    delta: tuple[tuple[tuple[int, int], Fraction], ...]  # sorted, nonzero only

    def __init__(self, n: int, f=None, delta=None):
        if n < 1:
            raise ValueError("n must be >= 1")
        fs = [Fraction(0)] * n if f is None else [as_fraction(x) for x in f]
        if len(fs) != n:
            raise ValueError(f"expected {n} fiber coefficients, got {len(fs)}")
        entries: dict[tuple[int, int], Fraction] = {}
        if delta:
            items = delta.items() if isinstance(delta, dict) else delta
            for key, value in items:
                i, j = key
                entries[_delta_key(i, j, n)] = entries.get((i, j), Fraction(0)) + as_fraction(value)
        clean = tuple(sorted((k, v) for k, v in entries.items() if v != 0))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "f", tuple(fs))
        object.__setattr__(self, "delta", clean)

    def delta_map(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.delta)

    def delta_coeff(self, i: int, j: int) -> Fraction:
        key = _delta_key(i, j, self.n)
        return dict(self.delta).get(key, Fraction(0))

    def __add__(self, other: "CnClass") -> "CnClass":
        if self.n != other.n:
            raise ValueError("cannot add classes on different products")
        f = [x + y for x, y in zip(self.f, other.f)]
        merged = dict(self.delta)
        for key, value in other.delta:
            merged[key] = merged.get(key, Fraction(0)) + value
        return CnClass(self.n, f, merged)

    def scale(self, t: Rational) -> "CnClass":
        t = as_fraction(t)
        return CnClass(self.n, [t * x for x in self.f], {k: t * v for k, v in self.delta})

    __rmul__ = scale

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "f": [frac_str(x) for x in self.f],
            "delta": {f"{i},{j}": frac_str(v) for (i, j), v in self.delta},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CnClass":
        try:
            n = int(data["n"])
            f = data["f"]
            raw = data.get("delta", {})
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed C^n class JSON: {exc}") from exc
        delta = {}
        for key, value in raw.items():
            parts = key.split(",")
            if len(parts) != 2:
                raise ValueError(f"bad diagonal key {key!r}, expected 'i,j'")
            delta[(int(parts[0]), int(parts[1]))] = value
        return cls(n, f, delta)

    def __repr__(self) -> str:
        return f"CnClass(n={self.n}, f={[frac_str(x) for x in self.f]}, delta={self.to_dict()['delta']})"


def pullback_sum(i: int, j: int, D: SurfaceClass, n: int) -> CnClass:
    """pr_ij^*(a f1 + b f2 + c delta) = a f_i + b f_j + c delta_ij on C^n.

    Pullbacks of nef classes along the projections stay nef, so sums of these
    are the basic way of writing down nef classes upstairs.
    """
    _delta_key(i, j, n)
    f = [Fraction(0)] * n
    f[i - 1] = D.a
    f[j - 1] = D.b
    return CnClass(n, f, {(i, j): D.c})


@dataclass(frozen=True)
class MixedClass:
    """Class on C x C_(n-1) in the basis (f, q^*x, q^*(delta/2), z).

    f is the fiber class of the first projection, q the second projection to
    the symmetric product C_(n-1), x a point divisor there, delta the big
    diagonal of C_(n-1), and z the universal divisor {(c, D) : c in D}.
    """

    coeff_f: Fraction
    coeff_qx: Fraction
    coeff_qdelta_half: Fraction
    coeff_z: Fraction

    def __init__(self, coeff_f: Rational, coeff_qx: Rational,
                 coeff_qdelta_half: Rational, coeff_z: Rational):
        object.__setattr__(self, "coeff_f", as_fraction(coeff_f))
        object.__setattr__(self, "coeff_qx", as_fraction(coeff_qx))
        object.__setattr__(self, "coeff_qdelta_half", as_fraction(coeff_qdelta_half))
        object.__setattr__(self, "coeff_z", as_fraction(coeff_z))

    def to_dict(self) -> dict[str, str]:
        return {
            "f": frac_str(self.coeff_f),
            "qx": frac_str(self.coeff_qx),
            "qdelta_half": frac_str(self.coeff_qdelta_half),
            "z": frac_str(self.coeff_z),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MixedClass":
        try:
            return cls(data["f"], data["qx"], data["qdelta_half"], data["z"])
        except KeyError as exc:
            raise ValueError(f"mixed class JSON needs keys f,qx,qdelta_half,z: missing {exc}") from exc


def lift_to_Cn(M: MixedClass, n: int) -> CnClass:
    """Pull back along 1 x pi : C x C^(n-1) -> C x C_(n-1), identified with C^n.

    The quotient map pi has degree (n-1)!; on classes,

        f              -> f_1
        q^* x          -> f_2 + ... + f_n
        q^*(delta/2)   -> sum of delta_ij over 2 <= i < j <= n
        z              -> delta_12 + ... + delta_1n

    so a nef class downstairs lifts to a nef class on C^n.
    """
    if n < 2:
        raise ValueError("lift needs n >= 2")
    f = [Fraction(0)] * n
    f[0] = M.coeff_f
    for i in range(2, n + 1):
        f[i - 1] = M.coeff_qx
    delta: dict[tuple[int, int], Fraction] = {}
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            delta[(i, j)] = M.coeff_qdelta_half
    for i in range(2, n + 1):
        delta[(1, i)] = delta.get((1, i), Fraction(0)) + M.coeff_z
    return CnClass(n, f, delta)
