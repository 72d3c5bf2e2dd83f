"""Interpolation dimension counts behind the very-general symmetric ray.

The linear system of bidegree-(1, n) curves on P^1 x P^1 has projective
dimension 2n + 1.  We impose two kinds of conditions:

- m "symmetric pairs": pass through both (p, q) and (q, p) for a general
  point pair — two evaluation rows each;
- r general simple points — one row each.

`expected_dim` is the naive count clamped at -1 (empty), with one genuine
exception: (n, m, r) = (1, 2, 0).  There the four rows are never independent
— for bidegree (1, 1) the difference row(p, q) - row(q, p) is a multiple of
the same antisymmetric functional for every pair — so the system is a single
point, not empty.

`sample_dim` measures the same dimension honestly, as a corank of a random
evaluation matrix, either over GF(32003) (fast, default) or over the
rationals (slower, airtight).  The two routes agreeing on a grid is the
machine check of the dimension lemma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

__all__ = [
    "DEFAULT_PRIME",
    "expected_dim",
    "sample_dim",
    "verify_lemma",
    "LemmaCell",
]

DEFAULT_PRIME = 32003
_FIELDS = ("gf", "qq")
_RATIONAL_COORD_BOUND = 10**6
_MAX_RESAMPLE = 64


def expected_dim(n: int, m: int, r: int) -> int:
    """Predicted projective dimension of the constrained system."""
    if n < 0 or m < 0 or r < 0:
        raise ValueError("n, m, r must be nonnegative")
    if (n, m, r) == (1, 2, 0):
        return 0
    return max(2 * n + 1 - 2 * m - r, -1)


def _monomial_row(x, y, n: int) -> list:
    """Evaluations of the 2(n+1) affine monomials y^i and x*y^i."""
    powers = [y**i for i in range(n + 1)]
    return powers + [x * p for p in powers]


def _sample_points(rng: Random, m: int, r: int, draw) -> tuple[list, list]:
    """m pair-base points and r simple points, all 2m + r distinct and no
    pair base on the diagonal (where the pair and its swap coincide)."""
    for _ in range(_MAX_RESAMPLE):
        pairs = [(draw(rng), draw(rng)) for _ in range(m)]
        simple = [(draw(rng), draw(rng)) for _ in range(r)]
        spread = [p for (x, y) in pairs for p in ((x, y), (y, x))] + simple
        if len(set(spread)) == len(spread) and all(x != y for x, y in pairs):
            return pairs, simple
    raise RuntimeError("could not sample a generic point configuration")


def _rank_gf(rows: list[list[int]], p: int) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    rows = [[v % p for v in row] for row in rows]
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rank_qq(rows: list[list[Fraction]]) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    rows = [list(row) for row in rows]
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [v / inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def sample_dim(n: int, m: int, r: int, *, field: str = "gf",
               prime: int = DEFAULT_PRIME, seed: int = 0) -> int:
    """Projective dimension measured on a random evaluation matrix.

    Deterministic for a fixed (seed, n, m, r, field): the point coordinates
    come from a stream seeded with all four.  Returns 2(n+1) - 1 - rank,
    so -1 means the constrained system is empty.
    """
    if n < 0 or m < 0 or r < 0:
        raise ValueError("n, m, r must be nonnegative")
    if field not in _FIELDS:
        raise ValueError(f"field must be one of {_FIELDS}")
    rng = Random(f"{seed}:{n}:{m}:{r}:{field}")
    if field == "gf":
        draw = lambda rg: rg.randrange(prime)
    else:
        draw = lambda rg: Fraction(rg.randrange(_RATIONAL_COORD_BOUND))
    pairs, simple = _sample_points(rng, m, r, draw)
    rows = []
    for x, y in pairs:
        rows.append(_monomial_row(x, y, n))
        rows.append(_monomial_row(y, x, n))
    for x, y in simple:
        rows.append(_monomial_row(x, y, n))
    if not rows:
        return 2 * n + 1
    rank = _rank_gf(rows, prime) if field == "gf" else _rank_qq(rows)
    return 2 * (n + 1) - 1 - rank


@dataclass(frozen=True)
class LemmaCell:
    n: int
    m: int
    r: int
    expected: int
    sampled: int

    @property
    def match(self) -> bool:
        return self.expected == self.sampled

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "r": self.r, "expected": self.expected,
                "sampled": self.sampled, "match": self.match}


def verify_lemma(max_n: int = 5, max_m: int | None = None, max_r: int = 2, *,
                 field: str = "gf", prime: int = DEFAULT_PRIME,
                 seed: int = 0) -> list[LemmaCell]:
    """Compare predicted and sampled dimensions across a grid.

    With max_m unset, m runs up to n + 2 (past that every cell is plainly
    empty).  Sampling can only overshoot the prediction — a random matrix
    never has more than the generic rank — so `match` failures mean an
    unlucky draw, not a wrong formula; rerun with another seed.
    """
    cells = []
    for n in range(max_n + 1):
        m_top = n + 2 if max_m is None else max_m
        for m in range(m_top + 1):
            for r in range(max_r + 1):
                cells.append(LemmaCell(
                    n, m, r,
                    expected_dim(n, m, r),
                    sample_dim(n, m, r, field=field, prime=prime, seed=seed)))
    return cells
