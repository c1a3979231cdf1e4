import random

import pytest

from shiftedlr.shapes import (Shape, enumerate_partitions,
                              enumerate_strict_partitions)
from shiftedlr.tableaux import (ClassViolation, Tableau, akey,
                                is_semistandard_young, is_standard,
                                is_valid_shifted, letter_str, parse_letter,
                                shifted_rowstandard, standard_fillings,
                                superstandard, tableau, transpose)
from randgen import random_skew_shape, random_standard


def test_letters():
    assert parse_letter("3'") == -3
    assert parse_letter(4) == 4
    assert letter_str(-2) == "2'"
    assert letter_str(2) == "2"
    # alphabet order 1' < 1 < 2' < 2 < ...
    assert sorted([2, -1, 1, -2], key=akey) == [-1, 1, -2, 2]
    with pytest.raises(ValueError):
        parse_letter(0)


def test_word():
    u = tableau([[1, 2, 3], [2, 4]])
    assert u.word() == (2, 4, 1, 2, 3)
    assert tableau([[1, 1, 2]]).word() == (1, 1, 2)
    assert tableau([]).word() == ()


def test_content():
    t = tableau([[1, "2'", 2, 2], ["2'", 3], ["4'"]], shifted=True)
    assert t.content() == (1, 4, 1, 1)
    assert tableau([]).content() == ()
    assert tableau([[1, 1], [2]]).content() == (2, 1)


def test_validity_predicates():
    assert is_semistandard_young(tableau([[1, 2, 2], [3, 4]]))
    assert not is_semistandard_young(tableau([[2, 1]]))
    assert is_valid_shifted(tableau([[1, "2'", 2, 2], ["2'", 3], ["4'"]],
                                    shifted=True))
    with pytest.raises(ClassViolation):
        is_semistandard_young(tableau([[1, "2'"]]))


def test_shifted_validity_details():
    # equal marked letters may not share a row
    assert not is_valid_shifted(tableau([["2'", "2'"]], shifted=False))
    # equal unmarked letters may not share a column
    assert not is_valid_shifted(tableau([[1, 1], [1]]))
    # but marked repeats down a column and unmarked along a row are fine
    assert is_valid_shifted(tableau([[1, 1]]))
    assert is_valid_shifted(tableau([["2'", 2], ["2'"]]))


def test_is_standard():
    assert is_standard(tableau([[1, 2], [3]]))
    assert not is_standard(tableau([[1, 1], [2]]))
    assert is_standard(tableau([[1, 2, 3, 4], [5, 6], [7]]))


def test_transpose():
    t = tableau([[1, 3, 4, 5], [2, 7], [6]])
    assert transpose(t) == tableau([[1, 2, 6], [3, 7], [4], [5]])
    assert transpose(tableau([[1]])) == tableau([[1]])
    assert transpose(tableau([[1, 2]])) == tableau([[1], [2]])
    with pytest.raises(ClassViolation):
        transpose(tableau([[1]], shifted=True))


def test_transpose_involution():
    rng = random.Random(7)
    for _ in range(40):
        shape = random_skew_shape(rng, max_size=10)
        t = random_standard(rng, shape)
        assert transpose(transpose(t)) == t


def test_superstandard():
    assert superstandard((4, 2, 1)) == tableau([[1, 1, 1, 1], [2, 2], [3]])
    assert superstandard((1,)) == tableau([[1]])
    assert superstandard((2, 2)) == tableau([[1, 1], [2, 2]])
    for n in range(0, 11):
        for mu in enumerate_partitions(n):
            assert superstandard(mu).content() == mu


def test_shifted_rowstandard():
    assert shifted_rowstandard((5, 2)) == tableau([[1, 2, 3, 4, 5], [6, 7]],
                                                  shifted=True)
    assert shifted_rowstandard((1,)) == tableau([[1]], shifted=True)
    assert shifted_rowstandard((3, 2)) == tableau([[1, 2, 3], [4, 5]],
                                                  shifted=True)
    for n in range(0, 11):
        for lam in enumerate_strict_partitions(n):
            t = shifted_rowstandard(lam)
            assert is_valid_shifted(t) and is_standard(t)


def test_word_length_matches_cells():
    rng = random.Random(3)
    for _ in range(30):
        shape = random_skew_shape(rng, max_size=9,
                                  shifted=rng.random() < 0.5)
        t = random_standard(rng, shape)
        assert len(t.word()) == shape.size


def test_empty_rows_keep_indices():
    t = tableau([[1, 1, 1], [2, 2], [3], [], [1]], inner=(3, 2, 1, 1))
    assert t.shape.outer == (6, 4, 2, 1, 1)
    assert t.entry(5, 1) == 1
    assert t.word() == (1, 3, 2, 2, 1, 1, 1)


def test_json_roundtrip():
    t = tableau([[1, "2'", 2], ["3'"]], inner=(1,), shifted=False)
    assert Tableau.from_json(t.to_json()) == t
    data = t.to_json()
    assert data["rows"][0][1] == {"v": 2, "m": True}


def test_render_uses_primes():
    t = tableau([[1, "2'"], [2]])
    text = t.render()
    assert "2'" in text
    assert "(empty)" == tableau([]).render()


def test_standard_fillings_counts():
    # hook length check on a couple of straight shapes
    assert len(list(standard_fillings(Shape((2, 1))))) == 2
    assert len(list(standard_fillings(Shape((2, 2))))) == 2
    assert len(list(standard_fillings(Shape((3, 2))))) == 5
    # shifted shapes: (2,1) is forced, (3,1) leaves one free choice
    assert len(list(standard_fillings(Shape((2, 1), shifted=True)))) == 1
    assert len(list(standard_fillings(Shape((3, 1), shifted=True)))) == 2
