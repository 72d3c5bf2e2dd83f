from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neflab.slopes import (
    MainCnClause,
    TwistedBundleData,
    asymptotic_limit,
    conormal_limit,
    exterior_power_data,
    exterior_power_slope,
    fekete_lower_bound,
    higher_conormal_slope,
    is_superadditive,
    kernel_bundle_data,
    mainCn_class,
    mainCn_condition,
    principal_parts_data,
    projective_bundle_nef,
    slope,
    t_bundle_limit,
    t_bundle_normalized_slope,
    tensor_data,
    twist_data,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
bundles = st.builds(TwistedBundleData, st.integers(min_value=1, max_value=12), rationals)


def test_slope_and_kernel_bundle_values():
    b = kernel_bundle_data(2, 4, 0, semistable=True)
    assert (b.rank, b.degree, slope(b), b.mu_min) == (2, -4, -2, -2)
    assert slope(kernel_bundle_data(3, 4, 1)) == Fraction(-4, 2)  # -d/(d-g+1)
    assert slope(kernel_bundle_data(10, 16, 0)) == -(1 + Fraction(10, 6))
    with pytest.raises(ValueError):
        kernel_bundle_data(5, 4, 0)  # rank would be -1


@given(bundles, bundles)
def test_tensor_additivity(left, right):
    assert slope(tensor_data(left, right)) == slope(left) + slope(right)


@given(bundles, rationals)
def test_twist_shifts_slope(b, t):
    assert slope(twist_data(b, t)) == slope(b) + t


def test_higher_conormal_values():
    assert higher_conormal_slope(2, 4, 1) == -2  # n=1: -a/(a-g)
    assert higher_conormal_slope(2, 3, 2) == Fraction(-14, 3)
    with pytest.raises(ValueError):
        higher_conormal_slope(2, 3, 0)
    with pytest.raises(ValueError):
        higher_conormal_slope(10, 3, 1)  # rank 3+1-10-1 < 1


def test_principal_parts_values():
    b = principal_parts_data(2, 5, 3)
    assert (b.rank, b.degree) == (3, 21)
    assert principal_parts_data(7, Fraction(9, 2), 1).degree == Fraction(9, 2)


def test_oracle_equivalence_full_grid():
    # the jet-bundle route and the closed form must agree exactly
    for g in range(2, 11):
        for a in range(g + 1, g + 13):
            for n in range(1, 21):
                rank = n * a + 1 - g - n
                if rank < 1:
                    continue
                jets = principal_parts_data(g, n * a, n)
                assert higher_conormal_slope(g, a, n) == -jets.degree / rank


def test_t_bundle_pinned_values():
    assert t_bundle_normalized_slope(2, 0, 4) == Fraction(-5, 3)
    assert t_bundle_normalized_slope(2, 0, 10) == Fraction(-11, 9)
    with pytest.raises(ValueError):
        t_bundle_normalized_slope(5, 0, 2)  # denominator 4 - 8 <= 0


def test_limits():
    assert conormal_limit(2, 3) == -2
    assert t_bundle_limit(2, 0) == -1
    assert asymptotic_limit(2, 3) == -2
    assert asymptotic_limit(2, 0) == -1
    with pytest.raises(ValueError):
        asymptotic_limit(2, 1)


@given(st.integers(min_value=2, max_value=12),
       st.fractions(min_value=2, max_value=30, max_denominator=6))
def test_conormal_convergence_monotone(g, a):
    limit = conormal_limit(g, a)
    errors = []
    for n in (4, 8, 16, 32):
        if n * a + 1 - g - n < 1:
            return
        errors.append(abs(higher_conormal_slope(g, a, n) / n - limit))
    assert all(x > y for x, y in zip(errors, errors[1:]))


@given(st.integers(min_value=2, max_value=12),
       st.fractions(min_value=-10, max_value=Fraction(3, 4), max_denominator=6))
def test_t_bundle_convergence_monotone(g, a):
    limit = t_bundle_limit(g, a)
    errors = []
    for n in (4, 8, 16, 32):
        if n * n * (1 - a) + n * (1 - g) <= 0:
            return
        errors.append(abs(t_bundle_normalized_slope(g, a, n) - limit))
    assert all(x > y for x, y in zip(errors, errors[1:]))


def test_conormal_sequence_is_superadditive_after_scaling():
    # n * (normalized slope) is superadditive, so its Fekete limit exists and
    # is bounded by the closed-form limit
    g, a = 3, 5
    values = [higher_conormal_slope(g, a, n) for n in range(1, 25)]
    assert is_superadditive(values)
    assert fekete_lower_bound(values) <= conormal_limit(g, a)


def test_fekete_utilities():
    assert is_superadditive([1, 2, 3, 4])
    assert not is_superadditive([1, 2, 2])
    assert fekete_lower_bound([2, 3, 7]) == Fraction(7, 3)
    with pytest.raises(ValueError):
        fekete_lower_bound([])


def test_projective_bundle_nef_boundary():
    b = TwistedBundleData(2, -4, Fraction(-2))
    assert projective_bundle_nef(b, (1, 2))
    assert not projective_bundle_nef(b, (1, Fraction(199, 100)))
    assert not projective_bundle_nef(b, (-1, 100))
    with pytest.raises(ValueError):
        projective_bundle_nef(TwistedBundleData(2, -4), (1, 0))


def test_twisted_kernel_bundle_is_nef_on_the_nose():
    # g=2, d=4 kernel bundle twisted by d/(d-g) per point of a degree-1 class
    b = twist_data(kernel_bundle_data(2, 4, 0, semistable=True), Fraction(4, 2))
    assert b.mu_min == 0
    assert projective_bundle_nef(b, (1, 0))


@given(bundles.filter(lambda b: b.rank >= 2), st.data())
def test_exterior_power_slope_scales(b, data):
    k = data.draw(st.integers(min_value=1, max_value=b.rank))
    assert exterior_power_slope(b, k) == k * slope(b)


def test_exterior_power_data_bookkeeping():
    b = kernel_bundle_data(2, 6, 0, semistable=True)  # rank 4, slope -3/2
    ext = exterior_power_data(b, 3)
    assert ext.rank == 4  # binom(4, 3)
    assert slope(ext) == Fraction(-9, 2)
    assert ext.mu_min == slope(ext)


def test_mainCn_clauses():
    assert mainCn_condition(3, 2, 10) is MainCnClause.CLAUSE_I
    # clause (i) catches this before the n >= 2g branch is consulted
    assert mainCn_condition(1, 4, 7) is MainCnClause.CLAUSE_I
    assert mainCn_condition(1, 4, 5) is MainCnClause.CLAUSE_II
    assert mainCn_condition(5, 3, 10) is MainCnClause.NOT_APPLICABLE
    with pytest.raises(ValueError):
        mainCn_condition(0, 2, 5)
    with pytest.raises(ValueError):
        mainCn_condition(2, 1, 5)


def test_mainCn_class_coefficients():
    cls = mainCn_class(3, 3, 10)
    assert cls.coeff_f == Fraction(20, 7)
    assert cls.coeff_qx == 10
    assert cls.coeff_qdelta_half == -1 and cls.coeff_z == -1
    with pytest.raises(ValueError):
        mainCn_class(3, 2, 3)
