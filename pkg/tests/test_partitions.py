"""Partition and skew-shape combinatorics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohomreps import (
    BoxOverflow,
    NotCompatible,
    NotNested,
    NotOrthogonal,
    Rectangle,
    canonical,
    complement,
    conjugate,
    contains,
    enumerate_partitions_in_box,
    format_partition,
    is_compatible,
    is_orthogonal,
    orthogonal_decomposition,
    parse_partition,
    rectangle_decomposition,
    skew_box_set,
)
from cohomreps.partitions import fits_in_box, length, weight


def boxed_partitions(max_p=4, max_q=4):
    """Strategy producing (lam, p, q) with lam inside the p x q box."""

    def build(draw):
        p = draw(st.integers(1, max_p))
        q = draw(st.integers(1, max_q))
        rows = draw(st.integers(0, p))
        parts = []
        cap = q
        for _ in range(rows):
            cap = draw(st.integers(0, cap))
            parts.append(cap)
        return canonical(parts), p, q

    return st.composite(build)()


class TestCanonical:
    def test_strips_trailing_zeros(self):
        assert canonical([3, 1, 0, 0]) == (3, 1)

    def test_empty(self):
        assert canonical([]) == ()
        assert canonical([0, 0]) == ()

    def test_rejects_increase(self):
        with pytest.raises(ValueError):
            canonical([1, 2])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            canonical([2, -1])

    def test_zero_before_positive_rejected(self):
        with pytest.raises(ValueError):
            canonical([2, 0, 1])


def test_weight_and_length():
    assert weight((3, 1)) == 4
    assert length((3, 1)) == 2
    assert weight(()) == 0


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


def test_fits_in_box():
    assert fits_in_box((2, 2), 2, 2)
    assert not fits_in_box((3,), 2, 2)
    assert not fits_in_box((1, 1, 1), 2, 2)


def test_complement_examples():
    assert complement((2, 1), 2, 3) == (2, 1)
    assert complement((), 2, 2) == (2, 2)
    assert complement((2, 2), 2, 2) == ()
    with pytest.raises(BoxOverflow):
        complement((5,), 2, 2)


def test_contains():
    assert contains((1,), (2, 1))
    assert not contains((2, 1), (1,))
    assert contains((), ())


def test_skew_box_set_cells_are_one_based():
    cells = skew_box_set((1,), (2, 1), 2, 2)
    assert cells == frozenset({(1, 2), (2, 1)})


def test_skew_box_set_requires_nesting():
    with pytest.raises(NotNested):
        skew_box_set((2,), (1,), 2, 2)


class TestRectangleDecomposition:
    def test_single_rectangle(self):
        dec = rectangle_decomposition((1, 1, 1), (3, 3, 3), 3, 4)
        assert dec.rectangles == (Rectangle(3, 2),)
        assert dec.anchors == ((1, 2),)
        assert dec.box_count == 6

    def test_two_corner_touching_rectangles(self):
        dec = rectangle_decomposition((2, 1), (3, 2), 2, 3)
        assert dec.rectangles == (Rectangle(1, 1), Rectangle(1, 1))
        assert dec.anchors == ((1, 3), (2, 2))

    def test_gap_between_rectangles_allowed(self):
        # middle row is empty, blocks need not touch at all
        dec = rectangle_decomposition((3, 2, 1), (4, 2, 2), 3, 4)
        assert dec.rectangles == (Rectangle(1, 1), Rectangle(1, 1))
        assert dec.anchors == ((1, 4), (3, 2))

    def test_overlapping_rows_rejected(self):
        with pytest.raises(NotCompatible):
            rectangle_decomposition((1,), (2, 2), 2, 2)

    def test_empty_skew(self):
        dec = rectangle_decomposition((2, 1), (2, 1), 2, 2)
        assert dec.rectangles == ()
        assert dec.boxes == frozenset()

    def test_full_box(self):
        dec = rectangle_decomposition((), (2, 2), 2, 2)
        assert dec.rectangles == (Rectangle(2, 2),)
        assert dec.box_count == 4


def test_is_compatible_never_raises():
    assert is_compatible((), (2, 2), 2, 2)
    assert not is_compatible((1,), (2, 2), 2, 2)
    assert not is_compatible((3,), (3,), 2, 2)  # lam sticks out of the box


class TestOrthogonal:
    def test_empty_partition(self):
        dec = orthogonal_decomposition((), 2, 2)
        assert dec.pairs == ()
        assert dec.center == (2, 2)

    def test_paired_blocks(self):
        # (1) in the 2x2 box: two single cells mirrored through the middle
        dec = orthogonal_decomposition((1,), 2, 2)
        assert dec.pairs == (Rectangle(1, 1),)
        assert dec.center == (0, 0)

    def test_central_block(self):
        # (1,1) in the 2x3 box: one column fixed by the half turn
        dec = orthogonal_decomposition((1, 1), 2, 3)
        assert dec.pairs == ()
        assert dec.center == (2, 1)

    def test_self_complementary_gives_empty_skew(self):
        dec = orthogonal_decomposition((2,), 2, 2)
        assert dec.skew.rectangles == ()
        assert dec.center == (0, 0)

    def test_not_orthogonal(self):
        # (2) in 2x2 is orthogonal but (2,1) is not nested in its complement
        with pytest.raises(NotOrthogonal):
            orthogonal_decomposition((2, 1), 2, 2)

    def test_is_orthogonal(self):
        assert is_orthogonal((1, 1), 2, 2)
        assert not is_orthogonal((2, 1), 2, 2)


def test_enumerate_partitions_count():
    # partitions in a p x q box are counted by the binomial coefficient
    from math import comb

    for p, q in [(1, 1), (2, 2), (2, 3), (3, 3)]:
        got = list(enumerate_partitions_in_box(p, q))
        assert len(got) == comb(p + q, p)
        assert len(set(got)) == len(got)


def test_enumerate_partitions_lex_order():
    got = list(enumerate_partitions_in_box(2, 2))
    assert got == sorted(got)


def test_format_and_parse_roundtrip():
    assert format_partition((3, 1)) == "[3,1]"
    assert format_partition(()) == "[]"
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("nope")
    with pytest.raises(ValueError):
        parse_partition('{"a": 1}')


@settings(max_examples=200, deadline=None)
@given(boxed_partitions())
def test_complement_is_an_involution(data):
    lam, p, q = data
    assert complement(complement(lam, p, q), p, q) == lam


@settings(max_examples=200, deadline=None)
@given(boxed_partitions())
def test_conjugate_commutes_with_complement(data):
    lam, p, q = data
    assert conjugate(complement(lam, p, q)) == complement(conjugate(lam), q, p)


@settings(max_examples=200, deadline=None)
@given(boxed_partitions(), boxed_partitions())
def test_decomposition_boxes_match_cell_set(a, b):
    lam, p, q = a
    mu, _, _ = b
    if not (fits_in_box(mu, p, q) and contains(lam, mu)):
        return
    if not is_compatible(lam, mu, p, q):
        return
    dec = rectangle_decomposition(lam, mu, p, q)
    assert dec.boxes == skew_box_set(lam, mu, p, q)
    assert dec.box_count == sum(a * b for a, b in dec.rectangles)
