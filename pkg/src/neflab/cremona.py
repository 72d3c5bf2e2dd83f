"""Cremona moves on blowups of P^2 and P^1 x P^1, with invariant checksums.

Classes are written with signed exceptional coefficients: a point of
multiplicity m contributes coefficient -m.  Two standard models:

- "p2":    d*H + sum(c_i * E_i), with H^2 = 1, E_i^2 = -1;
- "p1xp1": a*f1 + b*f2 + sum(c_i * E_i), with f1.f2 = 1, f1^2 = f2^2 = 0.

Both the three-point quadratic transform on P^2 and the two-point transform
on P^1 x P^1 are isometries of the intersection lattice fixing the canonical
class, so the pair (D.D, D.K) is carried along every step as a checksum.

The interest here: the symmetric class that controls degree-(1, g) curve
interpolation through 2g general points reduces to a fiber class in g moves,
which is the combinatorial engine behind the very-general genus bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Rational, as_fraction, frac_str

__all__ = [
    "P2",
    "P1XP1",
    "BlowupClass",
    "ReductionStep",
    "Reduction",
    "cremona_p2",
    "cremona_p1xp1",
    "p2_to_p1p1",
    "symmetric_interpolation_class",
    "reduce_symmetric_class",
]

P2 = "p2"
P1XP1 = "p1xp1"


@dataclass(frozen=True)
class BlowupClass:
    """A divisor class on a blowup of P^2 or P^1 x P^1 at distinct points."""

    model: str
    degrees: tuple[Fraction, ...]       # (d,) on p2, (a, b) on p1xp1
    exceptional: tuple[Fraction, ...]   # signed: -multiplicity

    def __post_init__(self):
        if self.model not in (P2, P1XP1):
            raise ValueError(f"unknown model {self.model!r}")
        want = 1 if self.model == P2 else 2
        if len(self.degrees) != want:
            raise ValueError(f"model {self.model} takes {want} degree coefficients")
        object.__setattr__(self, "degrees", tuple(as_fraction(v) for v in self.degrees))
        object.__setattr__(self, "exceptional", tuple(as_fraction(v) for v in self.exceptional))

    @classmethod
    def on_p2(cls, d: Rational, exceptional=()) -> "BlowupClass":
        return cls(P2, (as_fraction(d),), tuple(exceptional))

    @classmethod
    def on_p1xp1(cls, a: Rational, b: Rational, exceptional=()) -> "BlowupClass":
        return cls(P1XP1, (as_fraction(a), as_fraction(b)), tuple(exceptional))

    def dot(self, other: "BlowupClass") -> Fraction:
        if self.model != other.model or len(self.exceptional) != len(other.exceptional):
            raise ValueError("classes live on different blowups")
        exc = sum(x * y for x, y in zip(self.exceptional, other.exceptional)
                  if x and y)
        if self.model == P2:
            return self.degrees[0] * other.degrees[0] - exc
        return self.degrees[0] * other.degrees[1] + self.degrees[1] * other.degrees[0] - exc

    @property
    def square(self) -> Fraction:
        return self.dot(self)

    def canonical(self) -> "BlowupClass":
        ones = tuple(Fraction(1) for _ in self.exceptional)
        if self.model == P2:
            return BlowupClass(P2, (Fraction(-3),), ones)
        return BlowupClass(P1XP1, (Fraction(-2), Fraction(-2)), ones)

    @property
    def k_degree(self) -> Fraction:
        # dot(self, canonical()) unrolled: the canonical class is dense, so
        # building it on every checksum is the dominant cost of a reduction
        exc = sum(v for v in self.exceptional if v)
        if self.model == P2:
            return -3 * self.degrees[0] - exc
        return -2 * (self.degrees[0] + self.degrees[1]) - exc

    def checksum(self) -> tuple[Fraction, Fraction]:
        """(self-intersection, pairing with the canonical class) — both are
        preserved by every move in this module."""
        return (self.square, self.k_degree)

    def _check_centers(self, centers: tuple[int, ...], count: int):
        if len(set(centers)) != count:
            raise ValueError(f"need {count} distinct centers, got {centers}")
        for i in centers:
            if not 1 <= i <= len(self.exceptional):
                raise ValueError(f"center {i} out of range 1..{len(self.exceptional)}")

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "degrees": [frac_str(v) for v in self.degrees],
            "exceptional": [frac_str(v) for v in self.exceptional],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BlowupClass":
        return cls(data["model"], tuple(data["degrees"]), tuple(data["exceptional"]))

    def __repr__(self):
        deg = ", ".join(frac_str(v) for v in self.degrees)
        exc = ", ".join(frac_str(v) for v in self.exceptional)
        return f"BlowupClass({self.model}; [{deg}]; [{exc}])"


def cremona_p2(cls: BlowupClass, i: int, j: int, k: int) -> BlowupClass:
    """Quadratic transform of P^2 centered at points i, j, k (1-based)."""
    if cls.model != P2:
        raise ValueError("cremona_p2 needs a p2 class")
    cls._check_centers((i, j, k), 3)
    d = cls.degrees[0]
    c = list(cls.exceptional)
    ci, cj, ck = c[i - 1], c[j - 1], c[k - 1]
    c[i - 1] = -d - cj - ck
    c[j - 1] = -d - ci - ck
    c[k - 1] = -d - ci - cj
    return BlowupClass(P2, (2 * d + ci + cj + ck,), tuple(c))


def cremona_p1xp1(cls: BlowupClass, i: int, j: int) -> BlowupClass:
    """Elementary transform of P^1 x P^1 centered at points i, j (1-based).

    Keeps the first ruling, replaces the second by the pencil of (1,1)-curves
    through the two centers; an involution on the lattice.
    """
    if cls.model != P1XP1:
        raise ValueError("cremona_p1xp1 needs a p1xp1 class")
    cls._check_centers((i, j), 2)
    a, b = cls.degrees
    c = list(cls.exceptional)
    ci, cj = c[i - 1], c[j - 1]
    c[i - 1] = -a - ci
    c[j - 1] = -a - cj
    return BlowupClass(P1XP1, (a, a + b + ci + cj), tuple(c))


def p2_to_p1p1(cls: BlowupClass, i: int, j: int) -> BlowupClass:
    """Pivot: reread a blowup of P^2 at points i, j (and others) as a blowup
    of P^1 x P^1, via Bl_{i,j} P^2 = Bl_point (P^1 x P^1).

    The exceptional curves over i and j become the two rulings; the strict
    transform of the line through i and j becomes the exceptional curve of
    the P^1 x P^1 model and is placed first.  Remaining exceptional
    coefficients carry over in order.  H = f1 + f2 - e, E_i = f2 - e,
    E_j = f1 - e; the canonical class maps to the canonical class.
    """
    if cls.model != P2:
        raise ValueError("p2_to_p1p1 needs a p2 class")
    cls._check_centers((i, j), 2)
    d = cls.degrees[0]
    ci, cj = cls.exceptional[i - 1], cls.exceptional[j - 1]
    rest = tuple(v for t, v in enumerate(cls.exceptional, start=1) if t not in (i, j))
    return BlowupClass(P1XP1, (d + cj, d + ci), (-d - ci - cj,) + rest)


@dataclass(frozen=True)
class ReductionStep:
    operation: str
    centers: tuple[int, ...]
    result: BlowupClass
    checksum: tuple[Fraction, Fraction]

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "centers": list(self.centers),
            "result": self.result.to_dict(),
            "checksum": [frac_str(v) for v in self.checksum],
        }


@dataclass(frozen=True)
class Reduction:
    start: BlowupClass
    steps: tuple[ReductionStep, ...]

    @property
    def final(self) -> BlowupClass:
        return self.steps[-1].result if self.steps else self.start

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_dict(),
            "start_checksum": [frac_str(v) for v in self.start.checksum()],
            "steps": [s.to_dict() for s in self.steps],
            "final": self.final.to_dict(),
        }


def symmetric_interpolation_class(g: int, model: str) -> BlowupClass:
    """The class controlling (1, g)-curves through 2g general points.

    On p1xp1 it is f1 + g f2 - E_1 - ... - E_{2g}; the p2 avatar is
    g H - (g-1) E_1 - E_2 - ... - E_{2g}.  Both have checksum (0, -2).
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if model == P1XP1:
        return BlowupClass.on_p1xp1(1, g, (-1,) * (2 * g))
    if model == P2:
        return BlowupClass.on_p2(g, (-(g - 1),) + (-1,) * (2 * g - 1))
    raise ValueError(f"unknown model {model!r}")


def _apply_checked(cls: BlowupClass, operation, name: str,
                   centers: tuple[int, ...],
                   before: tuple[Fraction, Fraction] | None = None) -> ReductionStep:
    if before is None:
        before = cls.checksum()
    result = operation(cls, *centers)
    after = result.checksum()
    if after != before:
        raise ArithmeticError(
            f"{name}{centers} broke the invariants: {before} -> {after}")
    return ReductionStep(name, centers, result, after)


def reduce_symmetric_class(g: int, model: str) -> Reduction:
    """Run the full move sequence taking the symmetric class to a ruling.

    p1xp1: pairs (1,2), (3,4), ..., (2g-1, 2g) — g moves, ending at f1.
    p2:    triples (1,2,3), (1,4,5), ..., (1, 2g-2, 2g-1) — g-1 moves,
           ending at H - E_{2g}.

    Each step re-verifies the (D.D, D.K) checksum; a mismatch raises.
    """
    current = symmetric_interpolation_class(g, model)
    steps: list[ReductionStep] = []
    if model == P1XP1:
        schedule = [(2 * t + 1, 2 * t + 2) for t in range(g)]
        op, name = cremona_p1xp1, "cremona_p1xp1"
    else:
        schedule = [(1, 2 * t, 2 * t + 1) for t in range(1, g)]
        op, name = cremona_p2, "cremona_p2"
    running = current.checksum()
    for centers in schedule:
        step = _apply_checked(current, op, name, centers, running)
        steps.append(step)
        current, running = step.result, step.checksum
    return Reduction(symmetric_interpolation_class(g, model), tuple(steps))
