from math import factorial

from hypothesis import given, strategies as st
import pytest

from combinatorics.perm_core import (Permutation, bij_f, bij_g, clear_weight_cache, descents, disparity, flatten,
                                     format_word, maxwt, parse_word, permutations_of, split, stats, weight,
                                     weight_cache_info, weight_trace)
from core.errors import DomainError, PermutationError

small_perms = st.integers(min_value=1, max_value=7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@pytest.mark.parametrize(
    'word, expected',
    (
        ("123", 0),
        ("5461327", 3),
        ("21", 1),
    ),
)
def test_descents(word, expected):
    assert descents(word) == expected


@pytest.mark.parametrize(
    'word, expected',
    (
        ("839562147", ["839", "56", "2", "1", "47"]),
        ("123", ["1", "23"]),
        ("312", ["3", "1", "2"]),
    ),
)
def test_split(word, expected):
    assert [format_word(piece) for piece in split(word).pieces] == expected


def test_split_parts():
    decomposition = split("839562147")
    assert decomposition.minimum == 1
    assert [format_word(p) for p in decomposition.left] == ["839", "56", "2"]
    assert decomposition.right == (4, 7)


def test_split_empty():
    with pytest.raises(PermutationError, match="empty permutation"):
        split(())


@pytest.mark.parametrize(
    'word, expected',
    (
        ((6, 5, 9, 2, 4, 3, 10), (5, 4, 6, 1, 3, 2, 7)),
        ((4, 2), (2, 1)),
        ((7, 3, 5), (3, 1, 2)),
    ),
)
def test_flatten(word, expected):
    assert flatten(word).word == expected


def test_flatten_rejects_duplicates():
    with pytest.raises(PermutationError):
        flatten((3, 3, 1))


@pytest.mark.parametrize(
    'word, expected',
    (
        ("781659243", 5),
        ("123456", 0),
        ("132", 1),
        ("213", 0),
    ),
)
def test_weight(word, expected):
    assert weight(word) == expected
    assert weight(word, shortcut=True) == expected


def test_weight_of_long_word():
    assert weight("10,9,8,7,6,5,4,3,2,1") == 0
    assert weight(tuple(range(1, 13))) == 0


@given(small_perms)
def test_shortcut_agrees_with_definition(word):
    assert weight(word, shortcut=True) == weight(word)


@given(small_perms)
def test_weight_bounded_by_maxwt(word):
    n = len(word)
    assert 0 <= weight(word) <= maxwt(n, descents(word))


@pytest.mark.parametrize(
    'n, d, expected',
    (
        (5, 2, 4),
        (7, 3, 9),
        (6, 0, 0),
    ),
)
def test_maxwt(n, d, expected):
    assert maxwt(n, d) == expected


def test_maxwt_out_of_range():
    with pytest.raises(DomainError):
        maxwt(4, 4)


@pytest.mark.parametrize(
    'word, expected',
    (
        ("132", 0),
        ("213", 1),
        ("12345", 0),
    ),
)
def test_disparity(word, expected):
    assert disparity(word) == expected


def test_stats():
    s = stats("781659243")
    assert (s.length, s.descents, s.weight, s.disparity) == (9, 4, 5, 11)


@pytest.mark.parametrize(
    'word, image',
    (
        ("213", "3421"),
        ("123", "2341"),
    ),
)
def test_bijection_examples(word, image):
    assert str(bij_f(word)) == image
    assert str(bij_g(image)) == word


def test_bij_g_small():
    assert str(bij_g("21")) == "1"
    assert bij_g("1").word == ()


def test_bij_g_requires_trailing_one():
    with pytest.raises(PermutationError, match="not in S'"):
        bij_g("312")


@given(small_perms)
def test_bijection_keeps_weight_and_adds_descent(word):
    image = bij_f(word)
    assert image.ends_in_one
    assert weight(image) == weight(word)
    assert descents(image) == descents(word) + 1
    assert bij_g(image).word == tuple(word)


def test_weight_trace_matches_weight():
    steps = weight_trace("781659243")
    assert steps[0].depth == 0
    assert steps[0].completed == (7, 8, 1, 6, 5, 9, 2, 4, 3, 10)
    assert steps[0].weight == 5
    assert [format_word(p) for p in steps[0].pieces] == ["78", "1", "6,5,9,2,4,3,10"]
    assert weight_trace("5461327")[0].weight == 2


def test_weight_trace_first_level():
    steps = weight_trace("839562147")
    assert [format_word(p) for p in steps[0].pieces] == ["839", "56", "2", "1", "4,7,10"]


def test_weight_trace_identity_is_empty():
    assert weight_trace("1234") == []


@pytest.mark.parametrize(
    'text, word',
    (
        ("839562147", (8, 3, 9, 5, 6, 2, 1, 4, 7)),
        ("10,2,1", (10, 2, 1)),
        ("3 1 2", (3, 1, 2)),
        ("", ()),
    ),
)
def test_parse_word(text, word):
    assert parse_word(text) == word


def test_parse_rejects_garbage():
    with pytest.raises(PermutationError):
        Permutation.parse("12a")


def test_format_word():
    assert format_word((8, 3, 9)) == "839"
    assert format_word((10, 2, 1)) == "10,2,1"


@pytest.mark.parametrize('n', range(1, 9))
def test_split_and_flatten_over_all_of_s_n(n):
    for word in permutations_of(n):
        decomposition = split(word)
        assert sum(decomposition.pieces, ()) == word
        assert decomposition.pieces[decomposition.min_index] == (1,)
        assert flatten(word).word == word


@pytest.mark.slow
@pytest.mark.parametrize('n', range(1, 9))
def test_shortcut_agrees_over_all_of_s_n(n):
    for word in permutations_of(n):
        assert weight(word, shortcut=True) == weight(word)


@pytest.mark.slow
@pytest.mark.parametrize('n', range(1, 9))
def test_bijection_over_all_of_s_n(n):
    images = set()
    for word in permutations_of(n):
        image = bij_f(word)
        assert image.ends_in_one
        assert weight(image) == weight(word)
        assert descents(image) == descents(word) + 1
        assert bij_g(image).word == word
        images.add(image.word)
    assert len(images) == factorial(n)


def test_weight_memo_refills_after_clear():
    clear_weight_cache()
    assert weight_cache_info().currsize == 0
    assert weight("781659243") == 5
    assert weight_cache_info().currsize > 0
    assert weight("781659243") == 5
    assert weight_cache_info().hits > 0
