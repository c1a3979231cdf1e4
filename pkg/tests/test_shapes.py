import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftedlr.shapes import (Shape, add_staircase, conjugate, contains,
                              doubled_shape, enumerate_partitions,
                              enumerate_strict_partitions, format_partition,
                              is_strict, parse_partition, partition,
                              staircase, strict_partition)

partitions_st = st.integers(0, 12).map(lambda n: enumerate_partitions(n)).flatmap(st.sampled_from)


def test_partition_canonical():
    assert partition([3, 2, 0, 0]) == (3, 2)
    assert partition([]) == ()
    with pytest.raises(ValueError):
        partition([2, 3])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_conjugate_examples():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 2, 1)) == (3, 2, 1)


@given(partitions_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p


def test_staircase():
    assert staircase(3) == (3, 2, 1)
    assert staircase(1) == (1,)
    assert staircase(2) == (2, 1)
    assert staircase(0) == ()


def test_add_staircase():
    assert add_staircase((4, 2, 1)) == (7, 4, 2)
    assert add_staircase(()) == ()
    assert add_staircase((2, 2)) == (4, 3)


@given(partitions_st)
def test_add_staircase_strict(p):
    assert is_strict(add_staircase(p))


def test_doubled_shape_examples():
    assert doubled_shape((4, 2)) == (5, 4, 2, 1)
    assert doubled_shape((5, 2)) == (6, 4, 2, 1, 1)
    assert doubled_shape((1,)) == (2,)
    assert doubled_shape(()) == ()


def test_doubled_shape_properties():
    for n in range(0, 13):
        for lam in enumerate_strict_partitions(n):
            doubled = doubled_shape(lam)
            assert sum(doubled) == 2 * n
            conj = conjugate(doubled)
            for j in range(len(lam)):
                assert conj[j] == doubled[j] - 1


def test_enumerate_partitions():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                       (1, 1, 1, 1)]
    assert enumerate_partitions(4, max_len=2) == [(4,), (3, 1), (2, 2)]


def test_enumerate_strict_partitions():
    assert enumerate_strict_partitions(4) == [(4,), (3, 1)]
    assert enumerate_strict_partitions(0) == [()]
    assert enumerate_strict_partitions(6) == [(6,), (5, 1), (4, 2), (3, 2, 1)]


def test_enumeration_is_lex_descending_and_duplicate_free():
    for n in range(0, 10):
        for enum in (enumerate_partitions, enumerate_strict_partitions):
            ps = enum(n)
            assert len(set(ps)) == len(ps)
            assert ps == sorted(ps, reverse=True)
            assert all(sum(p) == n for p in ps)


def test_shape_cells_classical():
    shape = Shape((4, 3, 2), (3,))
    assert list(shape.cells()) == [(1, 4), (2, 1), (2, 2), (2, 3),
                                   (3, 1), (3, 2)]
    assert shape.size == 6


def test_shape_cells_shifted():
    shape = Shape((4, 2, 1), shifted=True)
    assert list(shape.cells()) == [(1, 1), (1, 2), (1, 3), (1, 4),
                                   (2, 2), (2, 3), (3, 3)]
    skew = Shape((5, 3, 2), (3, 2), shifted=True)
    assert list(skew.cells()) == [(1, 4), (1, 5), (2, 4), (3, 3), (3, 4)]


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape((2, 2), shifted=True)
    with pytest.raises(ValueError):
        Shape((2,), (3,))


def test_shape_json_roundtrip():
    for shape in (Shape((5, 3, 2), (3, 2), shifted=True), Shape((3, 1)),
                  Shape((2, 1), (1,))):
        assert Shape.from_json(shape.to_json()) == shape
    assert Shape((5, 3)).to_json() == {"outer": [5, 3], "inner": []}


def test_partition_strings():
    assert parse_partition("5,2") == (5, 2)
    assert parse_partition("") == ()
    assert format_partition((5, 2)) == "5,2"
    with pytest.raises(ValueError):
        parse_partition("5,x")
    with pytest.raises(ValueError):
        strict_partition((2, 2))
    assert contains((3, 2), (2, 2)) and not contains((3, 2), (4,))
