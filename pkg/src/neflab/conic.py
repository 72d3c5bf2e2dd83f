"""Exact nonnegative-combination solver over the rationals.

Answers one question: is a target vector a nonnegative rational combination
of given column vectors?  This is linear-programming phase one, run entirely
in `fractions.Fraction` with Bland's rule, so the answer is exact and the
returned coefficients can be replayed as a certificate.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .exact import Rational, as_fraction

__all__ = ["nonneg_solve"]


def nonneg_solve(columns: Sequence[Sequence[Rational]],
                 target: Sequence[Rational]) -> list[Fraction] | None:
    """Solve ``sum_j x_j * columns[j] == target`` with all ``x_j >= 0``.

    Returns exact coefficients, or None when no such combination exists.
    """
    m = len(target)
    n = len(columns)
    cols = [[as_fraction(v) for v in col] for col in columns]
    for j, col in enumerate(cols):
        if len(col) != m:
            raise ValueError(f"column {j} has length {len(col)}, expected {m}")
    rhs = [as_fraction(v) for v in target]

    if n == 0:
        return [] if all(v == 0 for v in rhs) else None

    # Tableau rows: [x columns | artificial identity | rhs], with every rhs
    # made nonnegative so the artificial basis is feasible.
    rows: list[list[Fraction]] = []
    for i in range(m):
        row = [cols[j][i] for j in range(n)]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(rhs[i])
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row)
    basis = [n + i for i in range(m)]

    # Objective: minimize the sum of artificials, kept in reduced form
    # w = obj_rhs - sum_j obj[j] x_j over the current basis.
    obj = [sum(rows[i][j] for i in range(m)) for j in range(n)]
    obj_rhs = sum(rows[i][-1] for i in range(m))

    while True:
        # Bland: smallest improving real column; artificials never re-enter.
        enter = next((j for j in range(n) if obj[j] > 0), None)
        if enter is None:
            break
        pivot_row = None
        best = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    best, pivot_row = ratio, i
        if pivot_row is None:
            # w unbounded below cannot happen (w >= 0); this means the
            # entering column is nonpositive everywhere, so no progress.
            break
        piv = rows[pivot_row][enter]
        rows[pivot_row] = [v / piv for v in rows[pivot_row]]
        for i in range(m):
            if i != pivot_row and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * p for v, p in zip(rows[i], rows[pivot_row])]
        f = obj[enter]
        obj = [v - f * p for v, p in zip(obj, rows[pivot_row][:n])]
        obj_rhs -= f * rows[pivot_row][-1]
        basis[pivot_row] = enter

    if obj_rhs != 0:
        return None
    solution = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            solution[b] = rows[i][-1]
    return solution
