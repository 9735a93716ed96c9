"""Signature and state strings and their lattice paths.

A string entry is a pair ``(state, color)`` with state in {1, 0, -1} and
color "B" or "W".  Each entry moves a point of Z^3: a black entry with state
1, 0, -1 adds one to coordinate 1, 2, 3 respectively, and a white entry
subtracts instead.  A string is dominant when every partial sum is weakly
decreasing and the final point is (m, m, m) for some integer m — these are
exactly the strings that grow into webs.

Strings whose entries are all black are abbreviated to their state word, a
sequence over {1, 0, -1} written textually with the characters ``1``, ``0``
and ``m``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    BadStep,
    LeavesChamber,
    NoReturn,
    NotAllBlack,
    NotBalanced,
    NotDominant,
    NotLatticeWord,
    ValidationError,
)
from .tableaux import GeneralizedOscillatingTableau, StandardYoungTableau

Entry = tuple[int, str]  # (state, color)

BLACK = "B"
WHITE = "W"

STATES = (1, 0, -1)
STATE_TO_ROW = {1: 1, 0: 2, -1: 3}
ROW_TO_STATE = {1: 1, 2: 0, 3: -1}

WORD_CHARS = {1: "1", 0: "0", -1: "m"}
CHAR_STATES = {"1": 1, "0": 0, "m": -1}


def validate_string(string: Sequence[Entry]) -> tuple[Entry, ...]:
    out = []
    for idx, entry in enumerate(string):
        try:
            state, color = entry
        except (TypeError, ValueError):
            raise BadStep(idx, f"entry {entry!r} is not a (state, color) pair") from None
        if state not in STATES or color not in (BLACK, WHITE):
            raise BadStep(idx, f"entry {entry!r} is not a valid (state, color) pair")
        out.append((state, color))
    return tuple(out)


def entry_delta(entry: Entry) -> tuple[int, int]:
    """The ``(row, delta)`` move on partial-sum vectors for one entry."""
    state, color = entry
    return STATE_TO_ROW[state], 1 if color == BLACK else -1


def path_from_string(string: Sequence[Entry]) -> tuple[tuple[int, int, int], ...]:
    """Partial sums (c1, c2, c3), one point per prefix including the empty one."""
    point = (0, 0, 0)
    path = [point]
    for entry in validate_string(string):
        row, delta = entry_delta(entry)
        point = tuple(
            c + delta if i == row - 1 else c for i, c in enumerate(point)
        )
        path.append(point)
    return tuple(path)


def in_chamber(point: Sequence[int]) -> bool:
    return point[0] >= point[1] >= point[2]


def is_dominant(string: Sequence[Entry]) -> bool:
    path = path_from_string(string)
    if any(not in_chamber(p) for p in path):
        return False
    return path[-1][0] == path[-1][1] == path[-1][2]


def got_from_string(string: Sequence[Entry]) -> GeneralizedOscillatingTableau:
    """Read the string as a tableau with three parts.

    Requires every partial sum to stay weakly decreasing; the string need not
    return to the diagonal.
    """
    path = path_from_string(string)
    for idx, point in enumerate(path):
        if not in_chamber(point):
            raise LeavesChamber(idx)
    return GeneralizedOscillatingTableau(path, 3)


def string_from_got(got: GeneralizedOscillatingTableau) -> tuple[Entry, ...]:
    """Inverse of ``got_from_string``; the tableau must have three parts."""
    if got.n != 3:
        raise ValidationError(f"need a tableau with 3 parts, got {got.n}")
    return tuple(
        (ROW_TO_STATE[row], BLACK if delta == 1 else WHITE)
        for row, delta in got.steps()
    )


def string_to_json(string: Sequence[Entry]) -> list[dict]:
    return [{"state": state, "color": color} for state, color in validate_string(string)]


def string_from_json(data: Iterable[dict]) -> tuple[Entry, ...]:
    return validate_string([(item["state"], item["color"]) for item in data])


def all_black(string: Sequence[Entry]) -> bool:
    return all(color == BLACK for _, color in string)


def word_of(string: Sequence[Entry]) -> tuple[int, ...]:
    """State word of an all-black string."""
    string = validate_string(string)
    if not all_black(string):
        raise NotAllBlack(f"{len(string)}-entry string has white entries")
    return tuple(state for state, _ in string)


def string_of_word(word: Sequence[int]) -> tuple[Entry, ...]:
    return validate_string([(state, BLACK) for state in word])


def parse_word(text: str) -> tuple[int, ...]:
    """Read a state word from its text form, e.g. ``"110m00mm0"``."""
    word = []
    for idx, char in enumerate(text.strip()):
        if char not in CHAR_STATES:
            raise BadStep(idx, f"unknown state character {char!r}")
        word.append(CHAR_STATES[char])
    return tuple(word)


def format_word(word: Sequence[int]) -> str:
    try:
        return "".join(WORD_CHARS[state] for state in word)
    except KeyError as exc:
        raise BadStep(0, f"unknown state {exc.args[0]!r}") from None


def syt_from_word(word: Sequence[int]) -> StandardYoungTableau:
    """Three-row rectangular tableau whose rows list the positions of the
    1s, 0s and -1s of a balanced lattice word."""
    word = tuple(word)
    rows: dict[int, list[int]] = {1: [], 0: [], -1: []}
    counts = {1: 0, 0: 0, -1: 0}
    for idx, state in enumerate(word, start=1):
        if state not in counts:
            raise BadStep(idx - 1, f"unknown state {state!r}")
        counts[state] += 1
        rows[state].append(idx)
        if not counts[1] >= counts[0] >= counts[-1]:
            raise NotLatticeWord(idx)
    if not counts[1] == counts[0] == counts[-1]:
        raise NotBalanced(f"state counts {counts} are not all equal")
    return StandardYoungTableau([rows[1], rows[0], rows[-1]])


def word_from_syt(t: StandardYoungTableau) -> tuple[int, ...]:
    shape = t.shape
    if len(shape) != 3 or len(set(shape)) != 1:
        raise NotBalanced(f"shape {shape} is not a three-row rectangle")
    word = [0] * t.size
    for state, row in zip(STATES, t.rows):
        for idx in row:
            word[idx - 1] = state
    return tuple(word)


def first_return_indices(string: Sequence[Entry]) -> tuple[int, int]:
    """1-based positions (a, b) where the path first returns to the two walls
    of the chamber.

    For a black first entry, ``a`` is the first index whose partial sum has
    c1 = c2 and ``b`` the first index after it with c2 = c3; for a white
    first entry the two walls swap roles.  Identity-free dominant strings
    always have both returns.
    """
    string = validate_string(string)
    if not string:
        raise NotDominant("empty string has no returns")
    path = path_from_string(string)
    first_black = string[0][1] == BLACK
    on_first = (lambda p: p[0] == p[1]) if first_black else (lambda p: p[1] == p[2])
    on_second = (lambda p: p[1] == p[2]) if first_black else (lambda p: p[0] == p[1])
    a = next((i for i in range(1, len(path)) if on_first(path[i])), None)
    if a is None:
        raise NoReturn("path never returns to the first wall")
    b = next((i for i in range(a + 1, len(path)) if on_second(path[i])), None)
    if b is None:
        raise NoReturn("path never returns to the second wall after the first")
    return a, b


def first_return_by_counting(word: Sequence[int]) -> tuple[int, int]:
    """Return positions for an all-black word, computed by letter counts: the
    first prefix with as many 1s as 0s, then the first later prefix with as
    many 0s as -1s.  Independent of ``first_return_indices`` by construction.
    """
    word = tuple(word)
    counts = {1: 0, 0: 0, -1: 0}
    a = None
    b = None
    for idx, state in enumerate(word, start=1):
        counts[state] += 1
        if a is None and counts[1] == counts[0]:
            a = idx
        elif a is not None and b is None and counts[0] == counts[-1]:
            b = idx
            break
    if a is None or b is None:
        raise NoReturn(f"word {word} lacks a balanced prefix pair")
    return a, b


def fork_extend_string(string: Sequence[Entry]) -> tuple[Entry, ...]:
    """Replace every entry of the minority color by a two-entry fork of the
    majority color (the color of the first entry), preserving the path's
    endpoints and dominance.

    A white entry with state j becomes the two black entries whose states are
    the other two values, larger first; a black entry mirrors with white
    forks, smaller first.
    """
    string = validate_string(string)
    if not string:
        return string
    base_color = string[0][1]
    out: list[Entry] = []
    for state, color in string:
        if color == base_color:
            out.append((state, color))
        elif base_color == BLACK:
            left, right = [s for s in (1, 0, -1) if s != state]
            out.extend([(left, BLACK), (right, BLACK)])
        else:
            left, right = [s for s in (-1, 0, 1) if s != state]
            out.extend([(left, WHITE), (right, WHITE)])
    return tuple(out)
