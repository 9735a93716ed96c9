"""Tests for generalized partitions, set-valued fillings, and promotion."""

import pytest
from hypothesis import given, settings, strategies as st

from oscweb.errors import (
    BadStart,
    BadStep,
    IndexOutOfRange,
    NotWeaklyDecreasing,
    ValidationError,
)
from oscweb.sieving import enumerate_got, enumerate_syt
from oscweb.tableaux import (
    BULLET,
    GeneralizedOscillatingTableau,
    GeneralizedPartition,
    StandardYoungTableau,
    bullet_tableau_at_step,
    can_change,
    check_prime_parity,
    classical_promotion,
    classical_promotion_growth,
    from_set_valued,
    got_from_syt,
    promote_growth,
    promote_tableau,
    syt_from_got,
    to_set_valued,
    validate_got,
)

# Shape sequences used repeatedly below.

INTRO = [(0, 0), (1, 0), (1, -1), (2, -1), (2, 0), (1, 0)]

LEFT = [
    (0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, -1),
    (0, 0, -2), (1, 0, -2), (1, 1, -2), (1, 1, -1),
]

RIGHT = [
    (0, 0, 0), (0, 0, -1), (0, -1, -1), (1, -1, -1), (1, 0, -1),
    (1, 0, -2), (1, 1, -2), (1, 0, -2), (1, 0, -1), (1, 0, 0),
]

RIGHT_PROMOTED = [
    (0, 0, 0), (0, 0, -1), (1, 0, -1), (1, 1, -1), (1, 1, -2),
    (2, 1, -2), (2, 0, -2), (2, 0, -1), (2, 0, 0), (1, 0, 0),
]

GROWTH_EXAMPLE = [
    (0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 0, -1), (2, 1, -1),
    (1, 1, -1), (1, 0, -1), (1, 0, 0), (0, 0, 0),
]

GROWTH_EXAMPLE_MU = (
    (0, 0, 0), (1, 0, 0), (1, 0, -1), (1, 1, -1), (1, 0, -1),
    (1, -1, -1), (1, 0, -1), (0, 0, -1), (0, 0, 0),
)

GROWTH_EXAMPLE_RULES = (
    "OP1a", "OP1c", "OP1a", "OP1d", "OP1c", "OP1b", "OP1c", "OP3",
)


def got(shapes, n):
    return GeneralizedOscillatingTableau(shapes, n)


# ---------------------------------------------------------------------------
# Generalized partitions.


def test_partition_padding_and_equality():
    assert GeneralizedPartition((2, 1), 3) == GeneralizedPartition((2, 1, 0), 3)
    assert GeneralizedPartition((2, 1), 2).n == 2
    assert GeneralizedPartition((), 4).parts == (0, 0, 0, 0)
    assert GeneralizedPartition((5, 5, 3, 0, -2, -2), 6).n == 6


def test_partition_fixed_part_count():
    with pytest.raises(NotWeaklyDecreasing):
        GeneralizedPartition((-1,), 2)  # padding with 0 would increase
    with pytest.raises(NotWeaklyDecreasing):
        GeneralizedPartition((5, 5, 3, 0, -2, -2), 7)
    with pytest.raises(NotWeaklyDecreasing):
        GeneralizedPartition((5, 5, 3, 0, -2, -2), 5)
    with pytest.raises(NotWeaklyDecreasing):
        GeneralizedPartition((1, 2), 2)


def test_partition_add_remove():
    p = GeneralizedPartition((2, 1, 1, -1), 4)
    assert p.can_add(1) and p.can_add(2) and not p.can_add(3) and p.can_add(4)
    assert p.can_remove(1) and not p.can_remove(2) and p.can_remove(3)
    assert p.can_remove(4)  # last row always shrinkable
    assert p.add(4).parts == (2, 1, 1, 0)
    assert p.remove(4).parts == (2, 1, 1, -2)
    assert p[1] == 2 and p[4] == -1
    with pytest.raises(IndexOutOfRange):
        p[5]


# ---------------------------------------------------------------------------
# Tableau validation.


def test_validate_intro_example():
    t = validate_got(INTRO, 2)
    assert t.k == 5 and t.n == 2
    assert t.shapes[3] == (2, -1)


def test_validate_empty_sequence_is_length_zero():
    t = validate_got([()], 3)
    assert t.k == 0 and t.shapes == ((0, 0, 0),)
    with pytest.raises(BadStart):
        validate_got([], 3)
    with pytest.raises(BadStart):
        validate_got([(1, 0)], 2)


def test_invalid_for_every_part_count():
    # (-1) forces one part while (2,1) needs at least two.
    shapes = [(), (-1,), (), (1,), (2,), (2, 1)]
    for n in range(1, 6):
        with pytest.raises(ValidationError):
            validate_got(shapes, n)


def test_bad_step_reports_index():
    with pytest.raises(BadStep) as err:
        validate_got([(0, 0), (1, 0), (2, 1)], 2)
    assert err.value.index == 2
    with pytest.raises(BadStep):
        validate_got([(0, 0), (2, 0)], 2)
    with pytest.raises(NotWeaklyDecreasing):
        validate_got([(0, 0), (0, 1)], 2)


def test_json_round_trip():
    t = got(RIGHT, 3)
    data = t.to_json()
    assert data["n"] == 3 and data["k"] == 9
    assert GeneralizedOscillatingTableau.from_json(data) == t


# ---------------------------------------------------------------------------
# Set-valued fillings.


def test_intro_filling():
    f = to_set_valued(got(INTRO, 2))
    assert f.cells == {
        (1, 1): ((1, False),),
        (1, 2): ((3, False), (5, True)),
        (2, -1): ((2, True), (4, False)),
    }
    assert from_set_valued(f) == got(INTRO, 2)


def test_left_filling():
    f = to_set_valued(got(LEFT, 3))
    assert f.cells == {
        (1, 1): ((1, False), (2, True), (5, False)),
        (2, 1): ((6, False),),
        (3, -1): ((3, True),),
        (3, -2): ((4, True), (7, False)),
    }


def test_right_filling():
    f = to_set_valued(got(RIGHT, 3))
    assert f.cells == {
        (1, 1): ((3, False),),
        (2, -1): ((2, True), (4, False)),
        (2, 1): ((6, False), (7, True)),
        (3, -2): ((5, True), (8, False)),
        (3, -1): ((1, True), (9, False)),
    }
    # Row sizes of the positive and negative parts of the filling.
    assert f.positive_row_sizes() == (1, 1, 0)
    assert f.negative_row_sizes() == (0, 1, 2)


def test_empty_filling():
    f = to_set_valued(got([()], 3))
    assert f.cells == {}
    assert from_set_valued(f) == got([()], 3)


def test_filling_json_round_trip():
    from oscweb.tableaux import SetValuedFilling

    f = to_set_valued(got(INTRO, 2))
    data = f.to_json()
    assert data[0] == {
        "row": 1, "col": 1, "labels": [{"i": 1, "primed": False}], "red": False,
    }
    assert data[2]["red"] is True
    assert SetValuedFilling.from_json(data, n=2, length=5) == f


def test_filling_round_trip_exhaustive():
    for k, n in [(4, 2), (4, 3), (5, 2)]:
        for t in enumerate_got(k, n):
            assert from_set_valued(to_set_valued(t)) == t


def test_prime_parity_and_row_profile():
    """Primes sit at even positions on the positive side, odd on the negative
    side; positive row sizes weakly decrease, negative ones weakly increase."""
    for t in enumerate_got(5, 3):
        f = to_set_valued(t)
        assert check_prime_parity(f)
        pos = f.positive_row_sizes()
        neg = f.negative_row_sizes()
        assert all(pos[i] >= pos[i + 1] for i in range(len(pos) - 1))
        assert all(neg[i] <= neg[i + 1] for i in range(len(neg) - 1))


# ---------------------------------------------------------------------------
# Classical promotion.


def test_classical_promotion():
    t = StandardYoungTableau([[1, 2, 6], [3, 5, 7], [4, 8, 9]])
    assert classical_promotion(t).rows == ((1, 4, 5), (2, 6, 8), (3, 7, 9))


def test_classical_promotion_second():
    t = StandardYoungTableau([[1, 2, 4], [3, 6, 7], [5, 8, 9]])
    assert classical_promotion(t).rows == ((1, 3, 6), (2, 5, 8), (4, 7, 9))


def test_classical_promotion_single_box():
    t = StandardYoungTableau([[1]])
    assert classical_promotion(t) == t


def test_syt_validation():
    with pytest.raises(BadStep):
        StandardYoungTableau([[1, 3], [2, 2]])
    with pytest.raises(BadStep):
        StandardYoungTableau([[2, 1], [3, 4]])
    with pytest.raises(BadStep):
        StandardYoungTableau([[1, 2], [4, 3]])
    with pytest.raises(NotWeaklyDecreasing):
        StandardYoungTableau([[1], [2, 3]])


def test_classical_growth_diagram():
    t = StandardYoungTableau([[1, 2, 6], [3, 5, 7], [4, 8, 9]])
    result, diagram = classical_promotion_growth(t)
    assert result == classical_promotion(t)
    assert diagram.bottom == (
        (), (1,), (1, 1), (1, 1, 1), (2, 1, 1), (3, 1, 1),
        (3, 2, 1), (3, 2, 2), (3, 3, 2), (3, 3, 3),
    )
    assert diagram.bullet_tableau(5) == ((2, 5, 6), (3, BULLET, 7), (4, 8, 9))


def test_classical_growth_matches_promotion_everywhere():
    for shape in [(1,), (2, 1), (2, 2), (3, 2), (2, 2, 1), (3, 3, 3)]:
        for t in enumerate_syt(shape):
            result, _ = classical_promotion_growth(t)
            assert result == classical_promotion(t)


def test_classical_promotion_order_on_rectangle():
    t = StandardYoungTableau([[1, 2, 6], [3, 5, 7], [4, 8, 9]])
    cursor = t
    for _ in range(9):
        cursor = classical_promotion(cursor)
    assert cursor == t


# ---------------------------------------------------------------------------
# Generalized oscillating promotion.


def test_promote_growth_example():
    result, trace = promote_growth(got(GROWTH_EXAMPLE, 3))
    assert trace.mu == GROWTH_EXAMPLE_MU
    assert trace.rule_used == GROWTH_EXAMPLE_RULES
    assert trace.row_index == (1, 1, 1, 1, 2, 2, 3, 3)
    assert trace.direction == (1,) * 8
    assert result == got(GROWTH_EXAMPLE_MU, 3)


def test_promote_growth_column_fixed():
    t = got([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)], 3)
    result, trace = promote_growth(t)
    assert result == t
    assert trace.rule_used == ("OP1b", "OP1b", "OP3")


def test_promote_growth_single_add_delete():
    t = got([(0, 0, 0), (1, 0, 0), (0, 0, 0)], 3)
    result, trace = promote_growth(t)
    assert result.shapes == ((0, 0, 0), (0, 0, -1), (0, 0, 0))
    assert trace.rule_used == ("OP1d", "OP3")
    mirror = got([(0, 0, 0), (0, 0, -1), (0, 0, 0)], 3)
    back, back_trace = promote_growth(mirror)
    assert back.shapes == ((0, 0, 0), (1, 0, 0), (0, 0, 0))
    assert back_trace.rule_used == ("OP2d", "OP3")


def test_promote_length_zero_is_identity():
    t = got([()], 3)
    result, trace = promote_growth(t)
    assert result == t and trace.mu == ((0, 0, 0),)
    assert promote_tableau(t) == t


def test_promote_tableau_figure_pair():
    t = got(RIGHT, 3)
    expected = got(RIGHT_PROMOTED, 3)
    assert promote_tableau(t) == expected
    assert promote_growth(t)[0] == expected


def test_promote_tableau_mirror_case():
    t = got([(0, 0, 0), (0, 0, -1), (0, 0, 0)], 3)
    assert promote_tableau(t).shapes == ((0, 0, 0), (1, 0, 0), (0, 0, 0))


def test_promotion_forms_agree_exhaustive():
    for k, n in [(5, 2), (4, 3)]:
        for t in enumerate_got(k, n):
            assert promote_tableau(t) == promote_growth(t)[0]


# ---------------------------------------------------------------------------
# Bullet tableaux.


def test_bullet_tableau_example():
    t = got(GROWTH_EXAMPLE, 3)
    _, trace = promote_growth(t)
    f = bullet_tableau_at_step(trace, t, 4)
    assert f.cells == {
        (1, 1): ((2, False), (8, True)),
        (1, 2): ((BULLET, False), (5, True)),
        (2, 1): ((4, False), (6, True)),
        (3, -1): ((3, True), (7, False)),
    }


def test_bullet_tableau_bounds():
    t = got(GROWTH_EXAMPLE, 3)
    _, trace = promote_growth(t)
    with pytest.raises(IndexOutOfRange):
        bullet_tableau_at_step(trace, t, 0)
    with pytest.raises(IndexOutOfRange):
        bullet_tableau_at_step(trace, t, 9)
    last = bullet_tableau_at_step(trace, t, t.k)
    assert any(
        index == BULLET for labels in last.cells.values() for index, _ in labels
    )


# ---------------------------------------------------------------------------
# Standard Young tableaux as oscillating tableaux.


def test_syt_embedding_round_trip():
    t = StandardYoungTableau([[1, 3], [2, 4]])
    g = got_from_syt(t)
    assert g.n == 2 and g.k == 4
    assert g.shapes == ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2))
    assert syt_from_got(g) == t


def test_promotion_restricts_to_classical():
    shapes = [(2, 1), (2, 2), (3, 1), (2, 2, 1), (3, 3), (2, 2, 2), (3, 3, 3)]
    for shape in shapes:
        for t in enumerate_syt(shape):
            g = got_from_syt(t)
            promoted, _ = promote_growth(g)
            assert syt_from_got(promoted) == classical_promotion(t)
            assert promote_tableau(g) == promoted


def test_monotone_row_indices():
    """Black-start tableaux have weakly increasing jeu de taquin rows; the
    mirror holds for white starts."""
    for t in enumerate_got(5, 3):
        if t.k == 0:
            continue
        _, trace = promote_growth(t)
        rows = trace.row_index
        if t.shapes[1] == (1, 0, 0):
            assert rows[0] == 1
            assert all(rows[i] <= rows[i + 1] for i in range(len(rows) - 1))
            assert trace.direction == (1,) * t.k
        else:
            assert rows[0] == 3
            assert all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1))
            assert trace.direction == (-1,) * t.k


def test_row_jump_characterization():
    """A jump i_s < i_{s+1} happens exactly at the first later shape whose
    row i_s ties with the row below it (and symmetrically for deletions)."""
    for t in enumerate_got(6, 3):
        if t.k == 0:
            continue
        _, trace = promote_growth(t)
        rows = trace.row_index
        adding = t.shapes[1] == (1, 0, 0)
        for s in range(1, t.k + 1):
            row = rows[s - 1]
            neighbor = row + 1 if adding else row - 1
            if not 1 <= neighbor <= 3:
                continue
            tie = next(
                (
                    r for r in range(s + 1, t.k + 1)
                    if t.shapes[r][row - 1] == t.shapes[r][neighbor - 1]
                ),
                None,
            )
            if tie is None:
                assert all(x == row for x in rows[s - 1:])
            else:
                assert all(x == row for x in rows[s - 1:tie - 1])
                if tie <= t.k:
                    assert (rows[tie - 1] > row) if adding else (rows[tie - 1] < row)


# ---------------------------------------------------------------------------
# Randomized round trips.


@st.composite
def random_got(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    k = draw(st.integers(min_value=0, max_value=12))
    shape = (0,) * n
    shapes = [shape]
    for _ in range(k):
        moves = [
            (row, delta)
            for row in range(1, n + 1)
            for delta in (1, -1)
            if can_change(shape, row, delta)
        ]
        row, delta = draw(st.sampled_from(moves))
        shape = shape[: row - 1] + (shape[row - 1] + delta,) + shape[row:]
        shapes.append(shape)
    return GeneralizedOscillatingTableau(shapes, n)


@given(random_got())
@settings(max_examples=200, deadline=None)
def test_random_round_trip_and_equivalence(t):
    assert from_set_valued(to_set_valued(t)) == t
    assert check_prime_parity(to_set_valued(t))
    assert GeneralizedOscillatingTableau.from_json(t.to_json()) == t
    growth, _ = promote_growth(t)
    assert promote_tableau(t) == growth
