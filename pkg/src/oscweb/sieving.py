"""Enumeration and cyclic sieving.

Enumerates generalized oscillating tableaux and dominant strings in a fixed
depth-first order, provides exact integer polynomial arithmetic for
q-analogues, and checks the cyclic sieving phenomenon for promotion on
two- and three-row rectangular standard Young tableaux.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InexactDivision, ValidationError
from .strings import BLACK, WHITE, Entry, ROW_TO_STATE
from .tableaux import (
    GeneralizedOscillatingTableau,
    Shape,
    StandardYoungTableau,
    bump,
    can_change,
    classical_promotion,
)

# Moves are tried row by row, adding before deleting.  For three parts this
# matches the letter order (1,B), (1,W), (0,B), (0,W), (-1,B), (-1,W) on the
# string side.


def enumerate_got(k: int, n: int) -> Iterator[GeneralizedOscillatingTableau]:
    """All tableaux in GOT(k, n), depth first."""
    if k < 0 or n < 1:
        raise ValidationError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    zero = (0,) * n
    chain: list[Shape] = [zero]

    def walk(remaining: int) -> Iterator[GeneralizedOscillatingTableau]:
        if remaining == 0:
            yield GeneralizedOscillatingTableau(list(chain), n)
            return
        shape = chain[-1]
        for row in range(1, n + 1):
            for delta in (1, -1):
                if can_change(shape, row, delta):
                    chain.append(bump(shape, row, delta))
                    yield from walk(remaining - 1)
                    chain.pop()

    return walk(k)


def enumerate_dominant_strings(k: int) -> Iterator[tuple[Entry, ...]]:
    """All dominant strings of length k, in the same depth-first order as
    ``enumerate_got(k, 3)``."""
    if k < 0:
        raise ValidationError(f"need k >= 0, got k={k}")
    entries: list[Entry] = []
    point = [0, 0, 0]

    def walk(remaining: int) -> Iterator[tuple[Entry, ...]]:
        if remaining == 0:
            if point[0] == point[1] == point[2]:
                yield tuple(entries)
            return
        if point[0] - point[2] > remaining:
            return
        for row in range(1, 4):
            for delta, color in ((1, BLACK), (-1, WHITE)):
                point[row - 1] += delta
                if point[0] >= point[1] >= point[2]:
                    entries.append((ROW_TO_STATE[row], color))
                    yield from walk(remaining - 1)
                    entries.pop()
                point[row - 1] -= delta

    return walk(k)


def count_dominant_strings(k: int) -> int:
    return sum(1 for _ in enumerate_dominant_strings(k))


def enumerate_syt(shape: Sequence[int]) -> Iterator[StandardYoungTableau]:
    """All standard Young tableaux of the given partition shape."""
    shape = tuple(int(x) for x in shape)
    if any(x <= 0 for x in shape) or any(
        shape[i] < shape[i + 1] for i in range(len(shape) - 1)
    ):
        raise ValidationError(f"{shape} is not a partition shape")
    total = sum(shape)
    fill = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> Iterator[StandardYoungTableau]:
        if value > total:
            yield StandardYoungTableau([list(row) for row in rows])
            return
        for r in range(len(shape)):
            if fill[r] < shape[r] and (r == 0 or fill[r - 1] > fill[r]):
                fill[r] += 1
                rows[r].append(value)
                yield from place(value + 1)
                rows[r].pop()
                fill[r] -= 1

    return place(1)


# ---------------------------------------------------------------------------
# Exact polynomials over the integers.


class IntPolynomial:
    """Dense integer polynomial; supports the exact division needed for
    q-analogues of hook length formulas."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self or not other:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __divmod__(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if other.coeffs[-1] not in (1, -1):
            raise InexactDivision(f"divisor is not monic: {other.coeffs}")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        for i in range(len(quot) - 1, -1, -1):
            factor = rem[i + other.degree] * lead
            quot[i] = factor
            if factor:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= factor * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def __call__(self, x: complex) -> complex:
        value = 0j if isinstance(x, complex) else 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            elif power == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{power}" if c != 1 else f"q^{power}")
        return " + ".join(terms)


def q_int(m: int) -> IntPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValidationError(f"need m >= 0, got {m}")
    return IntPolynomial([1] * m)


def q_factorial(m: int) -> IntPolynomial:
    out = IntPolynomial([1])
    for i in range(2, m + 1):
        out = out * q_int(i)
    return out


def hook_lengths_rectangle(b: int, n: int) -> list[int]:
    return [(b - i) + (n - j) + 1 for i in range(1, b + 1) for j in range(1, n + 1)]


def q_hook_rectangle(b: int, n: int) -> IntPolynomial:
    """[bn]_q! divided by the product of [h]_q over the hooks of the b-by-n
    rectangle.  The division is performed once, exactly."""
    if b < 1 or n < 1:
        raise ValidationError(f"need b, n >= 1, got b={b}, n={n}")
    numerator = q_factorial(b * n)
    denominator = IntPolynomial([1])
    for h in hook_lengths_rectangle(b, n):
        denominator = denominator * q_int(h)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivision(
            f"hook product does not divide [{b * n}]_q! for the {b}x{n} rectangle"
        )
    return quotient


# ---------------------------------------------------------------------------
# Cyclic sieving.


@dataclass(frozen=True)
class CspReport:
    """Outcome of a cyclic sieving check for promotion on a rectangle.

    The cyclic group has order N = rows * cols, the number of boxes; entry d
    of ``fixed_counts`` is the number of tableaux fixed by the d-th power of
    promotion, and entry d of ``evaluations`` is the sieving polynomial at
    the d-th power of a primitive N-th root of unity.
    """

    rows: int
    cols: int
    order: int
    tableau_count: int
    coefficients: tuple[int, ...]
    fixed_counts: tuple[int, ...]
    evaluations: tuple[int, ...]
    max_error: float
    tolerance: float
    ok: bool


def promotion_cycle_lengths(b: int, n: int) -> list[int]:
    """Cycle lengths of classical promotion on SYT of the b-by-n rectangle."""
    tableaux = list(enumerate_syt((n,) * b))
    index = {t.rows: i for i, t in enumerate(tableaux)}
    successor = [index[classical_promotion(t).rows] for t in tableaux]
    seen = [False] * len(tableaux)
    lengths = []
    for start in range(len(tableaux)):
        if seen[start]:
            continue
        length = 0
        cursor = start
        while not seen[cursor]:
            seen[cursor] = True
            cursor = successor[cursor]
            length += 1
        lengths.append(length)
    return lengths


def csp_check(b: int, n: int, tolerance: float = 1e-6) -> CspReport:
    """Compare fixed points of promotion powers against root-of-unity
    evaluations of the q-analogue hook length formula."""
    poly = q_hook_rectangle(b, n)
    order = b * n
    cycles = promotion_cycle_lengths(b, n)
    fixed_counts = tuple(
        sum(length for length in cycles if d % length == 0)
        for d in range(1, order + 1)
    )
    evaluations = []
    max_error = 0.0
    for d in range(1, order + 1):
        value = poly(cmath.exp(2j * cmath.pi * d / order))
        nearest = round(value.real)
        max_error = max(max_error, abs(value - nearest))
        evaluations.append(nearest)
    ok = max_error <= tolerance and tuple(evaluations) == fixed_counts
    return CspReport(
        rows=b,
        cols=n,
        order=order,
        tableau_count=sum(cycles),
        coefficients=poly.coeffs,
        fixed_counts=fixed_counts,
        evaluations=tuple(evaluations),
        max_error=max_error,
        tolerance=tolerance,
        ok=ok,
    )
