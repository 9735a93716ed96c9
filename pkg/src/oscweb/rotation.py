"""Rotation of dominant strings and the promotion–rotation correspondence.

Rotating a web moves its leftmost boundary vertex to the far end.  On the
string side the same move almost shifts the string one step left: the new
string agrees with the shifted one except at the two first-return positions
and the final entry, where the new states depend only on the colors of the
rotated-out vertex and of the vertices at the first returns.  Promotion of
the transcribed tableau performs exactly this rotation, which
``verify_main_theorem`` checks one string at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ContainsIdentityWeb,
    InternalError,
    NoMatch,
    NotDominant,
)
from .strings import (
    BLACK,
    Entry,
    STATE_TO_ROW,
    first_return_by_counting,
    first_return_indices,
    got_from_string,
    in_chamber,
    is_dominant,
    string_from_got,
    syt_from_word,
    validate_string,
)
from .tableaux import GeneralizedOscillatingTableau, promote_growth
from .webs import (
    contains_identity_component,
    grow_web,
    rotate_web,
    webs_equal,
)


def rotate_word_allblack(word: Sequence[int]) -> tuple[int, ...]:
    """Rotate a balanced lattice word: shift left, append -1, and put 1 and 0
    at the positions just before the two first returns."""
    word = tuple(word)
    syt_from_word(word)  # validates lattice and balance
    a, b = first_return_by_counting(word)
    out = list(word[1:]) + [-1]
    out[a - 2] = 1
    out[b - 2] = 0
    return tuple(out)


def _shifted_colors(string: Sequence[Entry]) -> list[str]:
    return [color for _, color in string[1:]] + [string[0][1]]


def rotate_string(string: Sequence[Entry]) -> tuple[Entry, ...]:
    """One-step rotation of an identity-free dominant string.

    Only three entries differ from the shifted string; their states are read
    off the colors of the leaving vertex and the two first-return vertices.
    """
    string = validate_string(string)
    if not is_dominant(string):
        raise NotDominant(f"cannot rotate a non-dominant {len(string)}-entry string")
    k = len(string)
    if k == 0:
        return ()
    if contains_identity_component(grow_web(string)):
        raise ContainsIdentityWeb(
            "rotation by the three-position rule needs an identity-free web"
        )
    a, b = first_return_indices(string)
    v = string[0][1]
    left_color = string[a - 1][1]
    right_color = string[b - 1][1]
    states = [state for state, _ in string[1:]] + [0]
    if v == left_color:
        states[a - 2] = 1 if v == BLACK else -1
    else:
        states[a - 2] = 0
    if v == right_color:
        states[b - 2] = 0
    else:
        states[b - 2] = -1 if v == BLACK else 1
    states[k - 1] = -1 if v == BLACK else 1
    return tuple(zip(states, _shifted_colors(string)))


def _dominant_strings_with_colors(colors: Sequence[str]):
    """All dominant strings with the given color word, depth first."""
    k = len(colors)
    entries: list[Entry] = []
    point = [0, 0, 0]

    def walk(i: int):
        if i == k:
            if point[0] == point[1] == point[2]:
                yield tuple(entries)
            return
        if point[0] - point[2] > k - i:
            return
        delta = 1 if colors[i] == BLACK else -1
        for state in (1, 0, -1):
            row = STATE_TO_ROW[state]
            point[row - 1] += delta
            if in_chamber(point):
                entries.append((state, colors[i]))
                yield from walk(i + 1)
                entries.pop()
            point[row - 1] -= delta

    yield from walk(0)


def rotate_string_oracle(string: Sequence[Entry]) -> tuple[Entry, ...]:
    """Rotated string found from the rotated web itself, with no use of the
    three-position rule: search the dominant strings carrying the shifted
    color word for the one that grows into the rotated web.

    Identity-free strings only need the twenty-seven candidates that vary at
    the three distinguished positions; otherwise every dominant string with
    the right color word is tried.  The match must be unique.
    """
    string = validate_string(string)
    if not is_dominant(string):
        raise NotDominant(f"cannot rotate a non-dominant {len(string)}-entry string")
    k = len(string)
    if k == 0:
        return ()
    web = grow_web(string)
    target = rotate_web(web)
    colors = _shifted_colors(string)

    if contains_identity_component(web):
        candidates = _dominant_strings_with_colors(colors)
    else:
        a, b = first_return_indices(string)
        base = [state for state, _ in string[1:]] + [0]

        def vary():
            seen = set()
            for x in (1, 0, -1):
                for y in (1, 0, -1):
                    for z in (1, 0, -1):
                        states = list(base)
                        states[a - 2] = x
                        states[b - 2] = y
                        states[k - 1] = z
                        candidate = tuple(zip(states, colors))
                        if candidate not in seen:
                            seen.add(candidate)
                            if is_dominant(candidate):
                                yield candidate

        candidates = vary()

    matches = [c for c in candidates if webs_equal(grow_web(c), target)]
    if not matches:
        raise NoMatch(f"no dominant string grows into the rotation of {string!r}")
    if len(matches) > 1:
        raise InternalError(f"rotation of {string!r} is ambiguous: {matches}")
    return matches[0]


@dataclass(frozen=True)
class RotationReport:
    """One check that promotion acts on a dominant string as web rotation."""

    string: tuple[Entry, ...]
    promoted: GeneralizedOscillatingTableau
    left_side: tuple[Entry, ...]  # string transcribed from the promoted tableau
    right_side: tuple[Entry, ...]  # rotated string, found per ``method``
    method: str  # "three-position-table" or "web-search"
    equal: bool
    web_isomorphic: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.web_isomorphic


def verify_main_theorem(string: Sequence[Entry]) -> RotationReport:
    """Promote the transcribed tableau, rotate the string, and compare both
    the strings and the webs they grow into."""
    string = validate_string(string)
    if not is_dominant(string):
        raise NotDominant(f"{len(string)}-entry string is not dominant")
    promoted, _ = promote_growth(got_from_string(string))
    left = string_from_got(promoted)
    web = grow_web(string)
    if contains_identity_component(web):
        method = "web-search"
        right = rotate_string_oracle(string)
    else:
        method = "three-position-table"
        right = rotate_string(string)
    isomorphic = (
        webs_equal(grow_web(left), rotate_web(web)) if is_dominant(left) else False
    )
    return RotationReport(
        string=string,
        promoted=promoted,
        left_side=left,
        right_side=right,
        method=method,
        equal=left == right,
        web_isomorphic=isomorphic,
    )


def promotion_order(
    got: GeneralizedOscillatingTableau, limit: int = 10000
) -> int:
    """Number of promotions needed to return to the start."""
    cursor = got
    for step in range(1, limit + 1):
        cursor, _ = promote_growth(cursor)
        if cursor == got:
            return step
    raise InternalError(f"promotion did not return within {limit} steps")
