from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from neflab.conic import nonneg_solve

small = st.fractions(min_value=-9, max_value=9, max_denominator=6)
coeff = st.fractions(min_value=0, max_value=9, max_denominator=6)


def test_simple_feasible_system():
    cols = [(1, 0), (0, 1), (1, 1)]
    x = nonneg_solve(cols, (3, 2))
    assert x is not None
    assert all(v >= 0 for v in x)
    assert (sum(x[j] * cols[j][0] for j in range(3)),
            sum(x[j] * cols[j][1] for j in range(3))) == (3, 2)


def test_obviously_infeasible():
    assert nonneg_solve([(1, 0), (0, 1)], (-1, 0)) is None
    assert nonneg_solve([(1, 1)], (1, 2)) is None


def test_zero_target_and_empty_columns():
    assert nonneg_solve([], (0, 0)) == []
    assert nonneg_solve([], (0, 1)) is None
    assert nonneg_solve([(1, 2), (3, 4)], (0, 0)) == [0, 0]


def test_exactness_no_float_drift():
    cols = [(Fraction(1, 3), Fraction(1)), (Fraction(1), Fraction(1, 7))]
    target = (Fraction(1, 3) * 5 + 2, Fraction(5) + Fraction(2, 7))
    x = nonneg_solve(cols, target)
    assert x == [5, 2]


def test_negative_coordinates_in_columns():
    # delta-slice flavored: (2, 3, -1) = 1*(2, 2, -1) + 1*(0, 1, 0)
    cols = [(2, 2, -1), (1, 0, 0), (0, 1, 0)]
    x = nonneg_solve(cols, (2, 3, -1))
    assert x == [1, 0, 1]


def test_length_mismatch_rejected():
    import pytest

    with pytest.raises(ValueError):
        nonneg_solve([(1, 2, 3)], (1, 2))


@given(st.lists(st.tuples(small, small, small), min_size=1, max_size=6).flatmap(
    lambda cols: st.tuples(st.just(cols),
                           st.lists(coeff, min_size=len(cols), max_size=len(cols)))))
def test_constructed_combinations_are_recovered(case):
    # any nonnegative combination must be certified feasible, and the
    # returned coefficients must reproduce the target exactly
    cols, weights = case
    target = tuple(sum(w * col[i] for w, col in zip(weights, cols)) for i in range(3))
    x = nonneg_solve(cols, target)
    assert x is not None
    assert all(v >= 0 for v in x)
    rebuilt = tuple(sum(xv * col[i] for xv, col in zip(x, cols)) for i in range(3))
    assert rebuilt == target


@given(st.lists(st.tuples(small, small), min_size=1, max_size=5),
       st.tuples(small, small))
def test_solver_never_lies_feasible(cols, target):
    x = nonneg_solve(cols, target)
    if x is not None:
        assert all(v >= 0 for v in x)
        rebuilt = tuple(sum(xv * col[i] for xv, col in zip(x, cols)) for i in range(2))
        assert rebuilt == tuple(Fraction(t) for t in target)
