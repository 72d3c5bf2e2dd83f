from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neflab.cremona import (
    P1XP1,
    P2,
    BlowupClass,
    cremona_p1xp1,
    cremona_p2,
    p2_to_p1p1,
    reduce_symmetric_class,
    symmetric_interpolation_class,
)

small = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def p2_classes(min_points=3, max_points=8):
    return st.builds(
        lambda d, exc: BlowupClass.on_p2(d, exc),
        small,
        st.lists(small, min_size=min_points, max_size=max_points))


def p1p1_classes(min_points=2, max_points=8):
    return st.builds(
        lambda a, b, exc: BlowupClass.on_p1xp1(a, b, exc),
        small, small,
        st.lists(small, min_size=min_points, max_size=max_points))


def test_intersection_forms():
    d = BlowupClass.on_p2(3, (-1, -2))
    assert d.square == 9 - 1 - 4
    e = BlowupClass.on_p1xp1(1, 3, (-1, -1))
    assert e.square == 2 * 3 - 1 - 1
    assert d.k_degree == -9 - (-1 - 2)
    assert e.k_degree == -2 - 6 + 2


def test_model_validation():
    with pytest.raises(ValueError):
        BlowupClass("p3", (Fraction(1),), ())
    with pytest.raises(ValueError):
        BlowupClass(P2, (Fraction(1), Fraction(1)), ())
    with pytest.raises(ValueError):
        cremona_p2(BlowupClass.on_p2(1, (-1, -1)), 1, 2, 3)
    with pytest.raises(ValueError):
        cremona_p1xp1(BlowupClass.on_p1xp1(1, 1, (-1, -1)), 1, 1)


def test_symmetric_class_checksums():
    for g in (1, 2, 5, 9):
        for model in (P1XP1, P2):
            cls = symmetric_interpolation_class(g, model)
            assert cls.checksum() == (0, -2)


@given(p1p1_classes(), st.data())
def test_p1p1_transform_is_an_involutive_isometry(cls, data):
    n = len(cls.exceptional)
    i = data.draw(st.integers(min_value=1, max_value=n - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=n))
    moved = cremona_p1xp1(cls, i, j)
    assert moved.checksum() == cls.checksum()
    assert cremona_p1xp1(moved, i, j) == cls  # M.M = I


@given(p1p1_classes(), p1p1_classes(), st.data())
def test_p1p1_transform_preserves_pairings(cls, other, data):
    # align the exceptional counts, then check <Mx, My> = <x, y>
    n = min(len(cls.exceptional), len(other.exceptional))
    cls = BlowupClass(P1XP1, cls.degrees, cls.exceptional[:n])
    other = BlowupClass(P1XP1, other.degrees, other.exceptional[:n])
    i = data.draw(st.integers(min_value=1, max_value=n - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=n))
    assert cremona_p1xp1(cls, i, j).dot(cremona_p1xp1(other, i, j)) == cls.dot(other)


@given(p2_classes(), st.data())
def test_p2_transform_is_an_involutive_isometry(cls, data):
    n = len(cls.exceptional)
    picks = data.draw(st.permutations(range(1, n + 1)))
    i, j, k = sorted(picks[:3])
    moved = cremona_p2(cls, i, j, k)
    assert moved.checksum() == cls.checksum()
    assert cremona_p2(moved, i, j, k) == cls


@given(p2_classes())
def test_p2_transform_fixes_canonical_class(cls):
    k = cls.canonical()
    assert cremona_p2(k, 1, 2, 3) == k


@given(p1p1_classes())
def test_p1p1_transform_fixes_canonical_class(cls):
    k = cls.canonical()
    assert cremona_p1xp1(k, 1, 2) == k


@given(p2_classes(), p2_classes(), st.data())
def test_pivot_to_p1p1_is_an_isometry(cls, other, data):
    n = min(len(cls.exceptional), len(other.exceptional))
    cls = BlowupClass(P2, cls.degrees, cls.exceptional[:n])
    other = BlowupClass(P2, other.degrees, other.exceptional[:n])
    i = data.draw(st.integers(min_value=1, max_value=n - 1))
    j = data.draw(st.integers(min_value=i + 1, max_value=n))
    assert p2_to_p1p1(cls, i, j).dot(p2_to_p1p1(other, i, j)) == cls.dot(other)


@given(p2_classes())
def test_pivot_maps_canonical_to_canonical(cls):
    moved = p2_to_p1p1(cls.canonical(), 1, 2)
    assert moved == moved.canonical()


def test_pivot_basis_images():
    h = BlowupClass.on_p2(1, (0, 0, 0))
    e1 = BlowupClass.on_p2(0, (-1, 0, 0))
    e3 = BlowupClass.on_p2(0, (0, 0, -1))
    assert p2_to_p1p1(h, 1, 2) == BlowupClass.on_p1xp1(1, 1, (-1, 0))
    assert p2_to_p1p1(e1, 1, 2) == BlowupClass.on_p1xp1(0, -1, (1, 0))
    assert p2_to_p1p1(e3, 1, 2) == BlowupClass.on_p1xp1(0, 0, (0, -1))


def test_reduction_traces_small_genus():
    red = reduce_symmetric_class(3, P1XP1)
    assert len(red.steps) == 3
    assert red.final == BlowupClass.on_p1xp1(1, 0, (0,) * 6)
    red = reduce_symmetric_class(3, P2)
    assert len(red.steps) == 2
    assert red.final == BlowupClass.on_p2(1, (0, 0, 0, 0, 0, -1))


def test_reduction_full_range():
    for g in range(1, 65):
        red = reduce_symmetric_class(g, P1XP1)
        assert len(red.steps) == g
        assert red.final == BlowupClass.on_p1xp1(1, 0, (0,) * (2 * g))
        assert all(s.checksum == (0, -2) for s in red.steps)
    for g in range(2, 65):
        red = reduce_symmetric_class(g, P2)
        assert len(red.steps) == g - 1
        expected = BlowupClass.on_p2(1, (0,) * (2 * g - 1) + (-1,))
        assert red.final == expected
        assert all(s.checksum == (0, -2) for s in red.steps)


def test_reduction_serialization():
    red = reduce_symmetric_class(2, P1XP1)
    payload = red.to_dict()
    assert payload["start_checksum"] == ["0", "-2"]
    assert len(payload["steps"]) == 2
    assert payload["final"]["degrees"] == ["1", "0"]
