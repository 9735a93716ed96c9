"""Tests for state strings, lattice paths, words, and first returns."""

import pytest

from oscweb.errors import (
    BadStep,
    LeavesChamber,
    NoReturn,
    NotAllBlack,
    NotBalanced,
    NotDominant,
    NotLatticeWord,
    ValidationError,
)
from oscweb.sieving import enumerate_dominant_strings, enumerate_got, enumerate_syt
from oscweb.strings import (
    BLACK,
    WHITE,
    all_black,
    first_return_by_counting,
    first_return_indices,
    fork_extend_string,
    format_word,
    got_from_string,
    in_chamber,
    is_dominant,
    parse_word,
    path_from_string,
    string_from_got,
    string_from_json,
    string_of_word,
    string_to_json,
    syt_from_word,
    validate_string,
    word_from_syt,
    word_of,
)
from oscweb.tableaux import GeneralizedOscillatingTableau, StandardYoungTableau

B, W = BLACK, WHITE

# A nine-entry mixed string and the tableau it transcribes.
MIXED = ((-1, W), (0, W), (1, B), (0, B), (-1, W), (0, B), (0, W), (-1, B), (-1, B))

MIXED_SHAPES = [
    (0, 0, 0), (0, 0, -1), (0, -1, -1), (1, -1, -1), (1, 0, -1),
    (1, 0, -2), (1, 1, -2), (1, 0, -2), (1, 0, -1), (1, 0, 0),
]

# An eleven-entry dominant string with both wall returns late.
DOMINANT11 = (
    (1, B), (1, B), (-1, W), (0, B), (-1, W), (0, B),
    (-1, B), (-1, B), (0, W), (1, W), (-1, B),
)

WORD9 = (1, 1, 0, 1, -1, 0, 0, -1, -1)


def lattice_words(length):
    """All balanced lattice words over {1, 0, -1} of the given length."""

    def rec(prefix, c1, c0, cm):
        if len(prefix) == length:
            if c1 == c0 == cm:
                yield tuple(prefix)
            return
        remaining = length - len(prefix)
        if c1 - cm > remaining:
            return
        for state, counts in ((1, (c1 + 1, c0, cm)), (0, (c1, c0 + 1, cm)),
                              (-1, (c1, c0, cm + 1))):
            a, b, c = counts
            if a >= b >= c:
                prefix.append(state)
                yield from rec(prefix, a, b, c)
                prefix.pop()

    yield from rec([], 0, 0, 0)


# ---------------------------------------------------------------------------
# Validation and paths.


def test_validate_string_errors():
    with pytest.raises(BadStep) as err:
        validate_string([(1, B), (2, B)])
    assert err.value.index == 1
    with pytest.raises(BadStep):
        validate_string([(1, "X")])
    with pytest.raises(BadStep):
        validate_string([17])


def test_path_white_tripod():
    assert path_from_string([(-1, W), (0, W), (1, W)]) == (
        (0, 0, 0), (0, 0, -1), (0, -1, -1), (-1, -1, -1),
    )


def test_path_of_mixed_string():
    assert path_from_string(MIXED) == tuple(MIXED_SHAPES)


def test_in_chamber():
    assert in_chamber((3, 1, 0)) and in_chamber((0, 0, 0)) and in_chamber((2, 2, 2))
    assert not in_chamber((0, 1, 0)) and not in_chamber((1, 2, 3))


def test_is_dominant():
    assert is_dominant(())  # stays at the origin
    assert is_dominant(DOMINANT11)
    assert is_dominant([(1, B), (0, B), (-1, B)])
    assert not is_dominant([(1, B)])  # ends off the diagonal
    assert not is_dominant([(1, W)])  # leaves the chamber immediately
    assert not is_dominant(MIXED)  # ends at (1, 0, 0)


# ---------------------------------------------------------------------------
# Strings as tableaux.


def test_got_from_string():
    assert got_from_string(()).k == 0
    assert got_from_string([(1, B), (1, W)]).shapes == ((0, 0, 0), (1, 0, 0), (0, 0, 0))
    assert got_from_string(MIXED) == GeneralizedOscillatingTableau(MIXED_SHAPES, 3)


def test_got_from_string_leaves_chamber():
    with pytest.raises(LeavesChamber) as err:
        got_from_string([(1, W)])
    assert err.value.index == 1
    with pytest.raises(LeavesChamber):
        got_from_string([(0, B)])
    with pytest.raises(LeavesChamber):
        got_from_string([(1, B), (0, B), (0, B)])


def test_string_from_got():
    assert string_from_got(GeneralizedOscillatingTableau(MIXED_SHAPES, 3)) == MIXED
    with pytest.raises(ValidationError):
        string_from_got(GeneralizedOscillatingTableau([(0, 0), (1, 0)], 2))


def test_string_round_trip_exhaustive():
    for t in enumerate_got(4, 3):
        assert got_from_string(string_from_got(t)) == t


def test_string_json():
    data = string_to_json(MIXED)
    assert data[0] == {"state": -1, "color": "W"}
    assert string_from_json(data) == MIXED


# ---------------------------------------------------------------------------
# Words.


def test_word_of():
    assert word_of([(1, B), (0, B), (-1, B)]) == (1, 0, -1)
    assert string_of_word((1, 0, -1)) == ((1, B), (0, B), (-1, B))
    with pytest.raises(NotAllBlack):
        word_of(MIXED)


def test_word_text_forms():
    assert format_word(WORD9) == "1101m00mm"
    assert parse_word("1101m00mm") == WORD9
    assert parse_word("") == ()
    with pytest.raises(BadStep):
        parse_word("10x")
    with pytest.raises(BadStep):
        format_word((1, 2))


def test_syt_from_word():
    assert syt_from_word((1, 0, -1)).rows == ((1,), (2,), (3,))
    assert syt_from_word((1, 0, 1, -1, 0, 1, -1, 0, -1)).rows == (
        (1, 3, 6), (2, 5, 8), (4, 7, 9),
    )
    assert syt_from_word(WORD9).rows == ((1, 2, 4), (3, 6, 7), (5, 8, 9))


def test_syt_from_word_errors():
    with pytest.raises(NotLatticeWord) as err:
        syt_from_word((0, 1, -1))
    assert err.value.index == 1
    with pytest.raises(NotLatticeWord):
        syt_from_word((1, -1, 0))
    with pytest.raises(NotBalanced):
        syt_from_word((1, 0, -1, 1))


def test_word_from_syt():
    assert word_from_syt(syt_from_word(WORD9)) == WORD9
    with pytest.raises(NotBalanced):
        word_from_syt(StandardYoungTableau([[1, 2], [3]]))
    with pytest.raises(NotBalanced):
        word_from_syt(StandardYoungTableau([[1, 3], [2, 4]]))


def test_words_biject_with_rectangular_tableaux():
    for n in (1, 2, 3, 4):
        words = list(lattice_words(3 * n))
        assert len(words) == {1: 1, 2: 5, 3: 42, 4: 462}[n]
        tableaux = {t.rows for t in enumerate_syt((n, n, n))}
        assert {syt_from_word(w).rows for w in words} == tableaux
        for w in words:
            assert word_from_syt(syt_from_word(w)) == w


# ---------------------------------------------------------------------------
# First returns to the chamber walls.


def test_first_return_frozen_values():
    assert first_return_indices(string_of_word((1, 0, -1))) == (2, 3)
    assert first_return_indices(string_of_word(WORD9)) == (7, 9)
    assert first_return_indices(((1, B), (0, B), (0, W), (1, W))) == (2, 3)
    assert first_return_indices(DOMINANT11) == (6, 11)


def test_first_return_white_start():
    assert first_return_indices([(-1, W), (0, W), (1, W)]) == (2, 3)


def test_first_return_errors():
    with pytest.raises(NotDominant):
        first_return_indices(())
    with pytest.raises(NoReturn):
        first_return_indices([(1, B)])
    # Identity-pair strings return to one wall but never the other.
    with pytest.raises(NoReturn):
        first_return_indices([(1, B), (1, W)])
    with pytest.raises(NoReturn):
        first_return_indices([(-1, W), (-1, B)])


def test_first_return_by_counting_agrees():
    assert first_return_by_counting((1, 0, -1)) == (2, 3)
    assert first_return_by_counting(WORD9) == (7, 9)
    for n in (1, 2, 3, 4):
        for word in lattice_words(3 * n):
            assert first_return_by_counting(word) == first_return_indices(
                string_of_word(word)
            )


# ---------------------------------------------------------------------------
# Fork extension.


def test_fork_extend_frozen():
    assert fork_extend_string([(1, B), (1, W)]) == ((1, B), (0, B), (-1, B))
    assert fork_extend_string([(-1, W), (-1, B)]) == ((-1, W), (0, W), (1, W))
    assert fork_extend_string(()) == ()
    assert fork_extend_string([(1, B), (0, B), (-1, B)]) == ((1, B), (0, B), (-1, B))


def test_fork_extend_entry_table():
    # Black base splits white entries, larger state first.
    assert fork_extend_string([(1, B), (0, W), (1, W), (-1, W), (-1, B)]) == (
        (1, B), (1, B), (-1, B), (0, B), (-1, B), (1, B), (0, B), (-1, B),
    )
    # White base splits black entries, smaller state first.
    assert fork_extend_string([(-1, W), (1, B), (0, B), (-1, B), (1, W)]) == (
        (-1, W), (-1, W), (0, W), (-1, W), (1, W), (0, W), (1, W), (1, W),
    )


def test_fork_extend_preserves_dominance():
    for k in range(0, 8):
        for string in enumerate_dominant_strings(k):
            extended = fork_extend_string(string)
            assert is_dominant(extended)
            assert len({color for _, color in extended}) <= 1
            minority = sum(1 for _, c in string if string and c != string[0][1])
            assert len(extended) == len(string) + minority


def test_dominant_strings_are_dominant():
    for k in range(0, 8):
        for string in enumerate_dominant_strings(k):
            assert is_dominant(string)
            final = got_from_string(string).final_shape()
            assert len(set(final)) == 1
