"""Generalized partitions, oscillating tableaux, and promotion.

A generalized partition is a weakly decreasing integer vector with a fixed
number of parts; negative parts are drawn as red boxes to the left of the
column axis.  A generalized oscillating tableau (GOT) is a sequence of such
vectors starting at zero, each step changing one part by one.  Promotion is
implemented twice — once via growth rules and once via set-valued jeu de
taquin — so the two can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadStart, BadStep, IndexOutOfRange, NotWeaklyDecreasing

Shape = tuple[int, ...]
Label = tuple[int, bool]  # (index, primed); index 0 is the jeu de taquin bullet

BULLET = 0


def _as_shape(parts: Iterable[int], n: int | None = None) -> Shape:
    """Normalize ``parts`` to a tuple, padding or trimming zeros to length n."""
    parts = tuple(int(p) for p in parts)
    if n is not None:
        if len(parts) < n:
            parts = parts + (0,) * (n - len(parts))
        elif len(parts) > n:
            if any(parts[n:]):
                raise NotWeaklyDecreasing(
                    n, f"{parts} cannot be written with {n} parts"
                )
            parts = parts[:n]
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise NotWeaklyDecreasing(i + 1, f"{parts}")
    return parts


class GeneralizedPartition:
    """A weakly decreasing integer vector of fixed length.

    Rows are 1-based.  ``can_add``/``can_remove`` test whether changing one
    part by one unit preserves the weak decrease; the first row can always
    grow and the last row can always shrink.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int], n: int | None = None):
        self.parts = _as_shape(parts, n)

    @property
    def n(self) -> int:
        return len(self.parts)

    def is_zero(self) -> bool:
        return not any(self.parts)

    def can_add(self, row: int) -> bool:
        return row == 1 or self.parts[row - 2] > self.parts[row - 1]

    def can_remove(self, row: int) -> bool:
        return row == self.n or self.parts[row - 1] > self.parts[row]

    def add(self, row: int) -> "GeneralizedPartition":
        return GeneralizedPartition(bump(self.parts, row, 1))

    def remove(self, row: int) -> "GeneralizedPartition":
        return GeneralizedPartition(bump(self.parts, row, -1))

    def __eq__(self, other) -> bool:
        if isinstance(other, GeneralizedPartition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, row: int) -> int:
        """Value of the 1-based ``row``."""
        if not 1 <= row <= self.n:
            raise IndexOutOfRange(f"row {row} not in [1, {self.n}]")
        return self.parts[row - 1]

    def __repr__(self) -> str:
        return f"GeneralizedPartition({self.parts!r})"


def bump(shape: Shape, row: int, delta: int) -> Shape:
    return shape[: row - 1] + (shape[row - 1] + delta,) + shape[row:]


def can_change(shape: Shape, row: int, delta: int) -> bool:
    """Whether ``bump(shape, row, delta)`` is still weakly decreasing."""
    if delta == 1:
        return row == 1 or shape[row - 2] > shape[row - 1]
    return row == len(shape) or shape[row - 1] > shape[row]


def step_between(a: Shape, b: Shape) -> tuple[int, int] | None:
    """Return ``(row, delta)`` if ``b`` differs from ``a`` by one unit in one
    part, else None.  ``row`` is 1-based and ``delta`` is +1 or -1."""
    found = None
    for idx, (x, y) in enumerate(zip(a, b)):
        if x == y:
            continue
        if found is not None or abs(y - x) != 1:
            return None
        found = (idx + 1, y - x)
    return found


class GeneralizedOscillatingTableau:
    """A sequence of generalized partitions starting at zero, each step
    changing one part by exactly one unit."""

    __slots__ = ("n", "shapes")

    def __init__(self, shapes: Sequence[Iterable[int]], n: int):
        if n < 1:
            raise BadStart(f"need at least one part, got n={n}")
        if len(shapes) == 0:
            raise BadStart("need at least the starting shape")
        normalized = []
        for idx, raw in enumerate(shapes):
            try:
                normalized.append(_as_shape(raw, n))
            except NotWeaklyDecreasing as exc:
                raise NotWeaklyDecreasing(idx, str(exc)) from None
        if any(normalized[0]):
            raise BadStart(f"first shape must be zero, got {normalized[0]}")
        for idx in range(1, len(normalized)):
            if step_between(normalized[idx - 1], normalized[idx]) is None:
                raise BadStep(idx)
        self.n = n
        self.shapes = tuple(normalized)

    @property
    def k(self) -> int:
        return len(self.shapes) - 1

    def steps(self) -> tuple[tuple[int, int], ...]:
        """The ``(row, delta)`` change at each of the k steps."""
        return tuple(
            step_between(self.shapes[i], self.shapes[i + 1])
            for i in range(self.k)
        )

    def final_shape(self) -> Shape:
        return self.shapes[-1]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "shapes": [list(s) for s in self.shapes]}

    @classmethod
    def from_json(cls, data: dict) -> "GeneralizedOscillatingTableau":
        got = cls(data["shapes"], data["n"])
        if "k" in data and data["k"] != got.k:
            raise BadStep(data["k"], "declared length disagrees with shapes")
        return got

    def __eq__(self, other) -> bool:
        if isinstance(other, GeneralizedOscillatingTableau):
            return self.n == other.n and self.shapes == other.shapes
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.shapes))

    def __repr__(self) -> str:
        return f"GeneralizedOscillatingTableau({list(self.shapes)!r}, n={self.n})"


def validate_got(shapes: Sequence[Iterable[int]], n: int) -> GeneralizedOscillatingTableau:
    """Check a raw sequence of integer vectors and wrap it as a GOT."""
    return GeneralizedOscillatingTableau(shapes, n)


# ---------------------------------------------------------------------------
# Cell geometry.  Columns live in Z \ {0}: a part p > 0 occupies white boxes
# in columns 1..p, a part p < 0 occupies red boxes in columns -1..p.  Column
# adjacency skips 0.

def col_succ(col: int) -> int:
    return 1 if col == -1 else col + 1


def col_pred(col: int) -> int:
    return -1 if col == 1 else col - 1


def cell_for_change(old_value: int, delta: int) -> int:
    """Column of the box recording a part change ``old_value -> old_value + delta``."""
    if delta == 1:
        return old_value + 1 if old_value >= 0 else old_value
    return old_value if old_value > 0 else old_value - 1


class SetValuedFilling:
    """Cells mapped to ordered label subsets.

    Labels are ``(index, primed)`` pairs: an unprimed index marks the step at
    which a part grew, a primed one the step at which it shrank.  Index 0 is
    reserved for the jeu de taquin bullet.  Cells in negative columns are the
    red part of the filling.
    """

    __slots__ = ("n", "length", "cells")

    def __init__(self, n: int, length: int, cells: dict[tuple[int, int], Iterable[Label]]):
        self.n = n
        self.length = length
        self.cells = {
            pos: tuple(sorted((int(i), bool(p)) for i, p in labels))
            for pos, labels in cells.items()
            if labels
        }

    def labels_at(self, row: int, col: int) -> tuple[Label, ...]:
        return self.cells.get((row, col), ())

    def positive_row_sizes(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for (r, c) in self.cells if r == row and c > 0)
            for row in range(1, self.n + 1)
        )

    def negative_row_sizes(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for (r, c) in self.cells if r == row and c < 0)
            for row in range(1, self.n + 1)
        )

    def to_json(self) -> list[dict]:
        out = []
        for (row, col) in sorted(self.cells):
            out.append(
                {
                    "row": row,
                    "col": col,
                    "labels": [
                        {"i": i, "primed": primed}
                        for i, primed in self.cells[(row, col)]
                    ],
                    "red": col < 0,
                }
            )
        return out

    @classmethod
    def from_json(cls, data: list[dict], n: int, length: int | None = None) -> "SetValuedFilling":
        cells: dict[tuple[int, int], list[Label]] = {}
        top = 0
        for entry in data:
            labels = [(lab["i"], bool(lab["primed"])) for lab in entry["labels"]]
            cells[(entry["row"], entry["col"])] = labels
            top = max([top] + [i for i, _ in labels])
        return cls(n, top if length is None else length, cells)

    def __eq__(self, other) -> bool:
        if isinstance(other, SetValuedFilling):
            return (self.n, self.length, self.cells) == (other.n, other.length, other.cells)
        return NotImplemented

    def __repr__(self) -> str:
        return f"SetValuedFilling(n={self.n}, length={self.length}, cells={self.cells!r})"

    def __str__(self) -> str:
        if not self.cells:
            return "(empty filling)"
        cols = sorted({c for _, c in self.cells})
        lines = []
        for row in range(1, self.n + 1):
            chunks = []
            for col in cols:
                text = "".join(
                    ("•" if i == BULLET else str(i)) + ("'" if primed else "")
                    for i, primed in self.labels_at(row, col)
                )
                mark = "r" if col < 0 and text else " "
                chunks.append(f"{text:>8}{mark}")
            lines.append("".join(chunks))
        return "\n".join(lines)


def to_set_valued(got: GeneralizedOscillatingTableau) -> SetValuedFilling:
    """Record each step of the tableau as a labeled box."""
    cells: dict[tuple[int, int], list[Label]] = {}
    for step, (before, after) in enumerate(zip(got.shapes, got.shapes[1:]), start=1):
        row, delta = step_between(before, after)
        col = cell_for_change(before[row - 1], delta)
        cells.setdefault((row, col), []).append((step, delta == -1))
    return SetValuedFilling(got.n, got.k, cells)


def from_set_valued(filling: SetValuedFilling) -> GeneralizedOscillatingTableau:
    """Rebuild the shape sequence from a filling; inverse of ``to_set_valued``."""
    events: dict[int, tuple[int, int, bool]] = {}
    for (row, col), labels in filling.cells.items():
        for index, primed in labels:
            if index == BULLET:
                raise BadStep(0, "filling still contains a bullet")
            if index in events:
                raise BadStep(index, f"label {index} appears twice")
            events[index] = (row, col, primed)
    if set(events) != set(range(1, filling.length + 1)):
        missing = sorted(set(range(1, filling.length + 1)) ^ set(events))
        raise BadStep(missing[0] if missing else 0, "label indices are not 1..k")
    shape = (0,) * filling.n
    shapes = [shape]
    for index in range(1, filling.length + 1):
        row, col, primed = events[index]
        delta = -1 if primed else 1
        if cell_for_change(shape[row - 1], delta) != col:
            raise BadStep(index, f"label {index} sits in column {col}, expected "
                                 f"{cell_for_change(shape[row - 1], delta)}")
        shape = bump(shape, row, delta)
        shapes.append(shape)
    return GeneralizedOscillatingTableau(shapes, filling.n)


def check_prime_parity(filling: SetValuedFilling) -> bool:
    """Primes are redundant: inside one cell, labels alternate starting
    unprimed on the positive side and primed on the negative side."""
    for (row, col), labels in filling.cells.items():
        for position, (index, primed) in enumerate(labels):
            if index == BULLET:
                continue
            expect = position % 2 == 1 if col > 0 else position % 2 == 0
            if primed != expect:
                return False
    return True


# ---------------------------------------------------------------------------
# Standard Young tableaux and classical promotion.


class StandardYoungTableau:
    """Rows of a Young diagram filled bijectively with 1..m, increasing along
    rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        rows = tuple(row for row in rows if row)
        shape = tuple(len(row) for row in rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise NotWeaklyDecreasing(0, f"shape {shape} is not a partition")
        flat = [v for row in rows for v in row]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise BadStep(0, "entries are not exactly 1..m")
        for row in rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise BadStep(0, "rows must increase")
        for r in range(len(rows) - 1):
            for c in range(len(rows[r + 1])):
                if rows[r][c] >= rows[r + 1][c]:
                    raise BadStep(0, "columns must increase")
        self.rows = rows

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def position_of(self, value: int) -> tuple[int, int]:
        """0-based (row, col) of ``value``."""
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if v == value:
                    return (r, c)
        raise IndexOutOfRange(f"value {value} not in tableau")

    def __eq__(self, other) -> bool:
        if isinstance(other, StandardYoungTableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardYoungTableau({[list(r) for r in self.rows]!r})"


def classical_promotion(t: StandardYoungTableau) -> StandardYoungTableau:
    """Delete 1, slide the hole through by successive swaps, refill, shift."""
    m = t.size
    if m == 0:
        return t
    grid = [list(row) for row in t.rows]
    pos = {v: t.position_of(v) for v in range(1, m + 1)}
    hole = (0, 0)
    for i in range(2, m + 1):
        r, c = pos[i]
        if (r, c) == (hole[0] + 1, hole[1]) or (r, c) == (hole[0], hole[1] + 1):
            grid[hole[0]][hole[1]] = i
            hole = (r, c)
    grid[hole[0]][hole[1]] = m + 1
    return StandardYoungTableau([[v - 1 for v in row] for row in grid])


def syt_shape_chain(t: StandardYoungTableau) -> tuple[Shape, ...]:
    """Shapes obtained by placing the entries 1..m one at a time."""
    m = t.size
    rows = [0] * len(t.rows)
    chain = [()]
    for v in range(1, m + 1):
        r, _ = t.position_of(v)
        rows[r] += 1
        chain.append(tuple(x for x in rows if x))
    return tuple(chain)


def syt_from_chain(chain: Sequence[Shape]) -> StandardYoungTableau:
    rows: list[list[int]] = []
    for step in range(1, len(chain)):
        prev, cur = chain[step - 1], chain[step]
        prev = prev + (0,) * (len(cur) - len(prev))
        for r, (a, b) in enumerate(zip(prev, cur)):
            if b == a + 1:
                while len(rows) <= r:
                    rows.append([])
                rows[r].append(step)
                break
        else:
            raise BadStep(step, "chain does not add one box per step")
    return StandardYoungTableau(rows)


@dataclass(frozen=True)
class GrowthDiagram:
    """Two shape chains, the input tableau on top and its promotion below."""

    top: tuple[Shape, ...]
    bottom: tuple[Shape, ...]

    def reading(self, s: int) -> tuple[Shape, ...]:
        """The hybrid chain (bottom[0..s-1], top[s..k])."""
        k = len(self.top) - 1
        if not 1 <= s <= k:
            raise IndexOutOfRange(f"step {s} not in [1, {k}]")
        return self.bottom[:s] + self.top[s:]

    def bullet_tableau(self, s: int) -> tuple[tuple[int, ...], ...]:
        """Entries of the intermediate tableau; 0 marks the moving hole."""
        chain = self.reading(s)
        cells: dict[tuple[int, int], int] = {}
        for step in range(1, len(chain)):
            prev = chain[step - 1] + (0,) * (len(chain[step]) - len(chain[step - 1]))
            cur = chain[step] + (0,) * (len(prev) - len(chain[step]))
            for r, (a, b) in enumerate(zip(prev, cur)):
                if b != a:
                    if step < s:
                        label = step + 1
                    elif step == s:
                        label = BULLET
                    else:
                        label = step
                    cells[(r, min(a, b))] = label
                    break
        nrows = max(r for r, _ in cells) + 1
        rows = []
        for r in range(nrows):
            ncols = max(c for rr, c in cells if rr == r) + 1
            rows.append(tuple(cells[(r, c)] for c in range(ncols)))
        return tuple(rows)


def classical_promotion_growth(
    t: StandardYoungTableau,
) -> tuple[StandardYoungTableau, GrowthDiagram]:
    """Promotion computed on shape chains: copy the next step down when it
    keeps the lower chain a partition, otherwise fall back to the upper shape."""
    top = syt_shape_chain(t)
    k = t.size
    if k == 0:
        return t, GrowthDiagram(top, top)
    bottom = [()]
    for s in range(1, k):
        prev = bottom[-1]
        lam_s, lam_next = top[s], top[s + 1]
        width = max(len(lam_next), len(prev) + 1)
        padded_prev = prev + (0,) * (width - len(prev))
        padded_s = lam_s + (0,) * (width - len(lam_s))
        padded_next = lam_next + (0,) * (width - len(lam_next))
        j = next(r for r in range(width) if padded_next[r] != padded_s[r])
        candidate = bump(padded_prev, j + 1, 1)
        if j == 0 or candidate[j - 1] >= candidate[j]:
            new = candidate
        else:
            new = padded_s
        bottom.append(tuple(x for x in new if x))
    bottom.append(top[k])
    diagram = GrowthDiagram(top, tuple(bottom))
    return syt_from_chain(diagram.bottom), diagram


# ---------------------------------------------------------------------------
# Generalized oscillating promotion, growth-rule form.


@dataclass(frozen=True)
class PromotionTrace:
    """Per-step record of a growth-rule promotion.

    ``mu`` is the produced chain (mu[0..k]); ``row_index[s-1]`` is the row in
    which shapes[s] differs from mu[s-1]; ``direction[s-1]`` is +1 when that
    difference is an added box and -1 when it is a deleted one; ``rule_used``
    tags which growth rule produced each mu[s].
    """

    mu: tuple[Shape, ...]
    row_index: tuple[int, ...]
    direction: tuple[int, ...]
    rule_used: tuple[str, ...]


def promote_growth(
    got: GeneralizedOscillatingTableau,
) -> tuple[GeneralizedOscillatingTableau, PromotionTrace]:
    """Apply the growth rules once; returns the new tableau and its trace."""
    lam = got.shapes
    k, n = got.k, got.n
    if k == 0:
        return got, PromotionTrace((lam[0],), (), (), ())
    mu: list[Shape] = [lam[0]]
    row_index: list[int] = []
    direction: list[int] = []
    rules: list[str] = []
    for s in range(1, k + 1):
        diff = step_between(mu[s - 1], lam[s])
        assert diff is not None, "lower and upper chains drifted apart"
        i_row, i_delta = diff
        row_index.append(i_row)
        direction.append(i_delta)
        if s == k:
            mu.append(lam[k])
            rules.append("OP3")
            break
        j_row, j_delta = step_between(lam[s], lam[s + 1])
        prev = mu[s - 1]
        if i_delta == 1:
            if j_delta == 1:
                if can_change(prev, j_row, 1):
                    mu.append(bump(prev, j_row, 1))
                    rules.append("OP1a")
                else:
                    assert j_row != i_row
                    mu.append(lam[s])
                    rules.append("OP1b")
            else:
                if can_change(prev, j_row, -1):
                    mu.append(bump(prev, j_row, -1))
                    rules.append("OP1c")
                else:
                    assert j_row == i_row
                    t = 1
                    while not can_change(prev, i_row + t, -1):
                        t += 1
                    mu.append(bump(prev, i_row + t, -1))
                    rules.append("OP1d")
        else:
            if j_delta == -1:
                if can_change(prev, j_row, -1):
                    mu.append(bump(prev, j_row, -1))
                    rules.append("OP2a")
                else:
                    assert j_row != i_row
                    mu.append(lam[s])
                    rules.append("OP2b")
            else:
                if can_change(prev, j_row, 1):
                    mu.append(bump(prev, j_row, 1))
                    rules.append("OP2c")
                else:
                    assert j_row == i_row
                    t = 1
                    while not can_change(prev, i_row - t, 1):
                        t += 1
                    mu.append(bump(prev, i_row - t, 1))
                    rules.append("OP2d")
    result = GeneralizedOscillatingTableau(mu, n)
    return result, PromotionTrace(
        tuple(mu), tuple(row_index), tuple(direction), tuple(rules)
    )


def bullet_tableau_at_step(
    trace: PromotionTrace, got: GeneralizedOscillatingTableau, s: int
) -> SetValuedFilling:
    """Filling read from (mu[0..s-1], shapes[s..k]); the bullet is label 0."""
    k = got.k
    if not 1 <= s <= k:
        raise IndexOutOfRange(f"step {s} not in [1, {k}]")
    chain = trace.mu[:s] + got.shapes[s:]
    cells: dict[tuple[int, int], list[Label]] = {}
    for step in range(1, k + 1):
        row, delta = step_between(chain[step - 1], chain[step])
        col = cell_for_change(chain[step - 1][row - 1], delta)
        if step < s:
            label = step + 1
        elif step == s:
            label = BULLET
        else:
            label = step
        cells.setdefault((row, col), []).append((label, delta == -1))
    return SetValuedFilling(got.n, k, cells)


# ---------------------------------------------------------------------------
# Generalized oscillating promotion, set-valued jeu de taquin form.


def promote_tableau(got: GeneralizedOscillatingTableau) -> GeneralizedOscillatingTableau:
    """Apply promotion by sliding a bullet through the set-valued filling.

    Independent of ``promote_growth``; the two agree on every input.
    """
    k, n = got.k, got.n
    if k == 0:
        return got
    lam = got.shapes
    pos: dict[int, tuple[int, int]] = {}
    primed: dict[int, bool] = {}
    for step in range(1, k + 1):
        row, delta = step_between(lam[step - 1], lam[step])
        pos[step] = (row, cell_for_change(lam[step - 1][row - 1], delta))
        primed[step] = delta == -1
    bullet = pos.pop(1)
    bullet_primed = primed.pop(1)

    for i in range(2, k + 1):
        r_b, c_b = bullet
        if not bullet_primed:
            below, right = (r_b + 1, c_b), (r_b, col_succ(c_b))
            if not primed[i] and pos[i] in (below, right):
                pos[i], bullet = bullet, pos[i]
            elif primed[i] and pos[i] == bullet:
                shape = lam[i]
                if r_b == n or shape[r_b - 1] != shape[r_b]:
                    row = r_b
                else:
                    row = max(
                        rr for rr in range(r_b, n + 1)
                        if shape[rr - 1] == shape[r_b - 1]
                    )
                target = (row, col_pred(c_b))
                pos[i] = target
                bullet = target
        else:
            above, left = (r_b - 1, c_b), (r_b, col_pred(c_b))
            if primed[i] and pos[i] in (above, left):
                pos[i], bullet = bullet, pos[i]
            elif not primed[i] and pos[i] == bullet:
                shape = lam[i]
                if r_b == 1 or shape[r_b - 1] != shape[r_b - 2]:
                    row = r_b
                else:
                    row = min(
                        rr for rr in range(1, r_b + 1)
                        if shape[rr - 1] == shape[r_b - 1]
                    )
                target = (row, col_succ(c_b))
                pos[i] = target
                bullet = target

    pos[k + 1] = bullet
    primed[k + 1] = bullet_primed
    cells: dict[tuple[int, int], list[Label]] = {}
    for step in range(2, k + 2):
        cells.setdefault(pos[step], []).append((step - 1, primed[step]))
    return from_set_valued(SetValuedFilling(n, k, cells))


# ---------------------------------------------------------------------------
# Standard Young tableaux as oscillating tableaux.


def got_from_syt(
    t: StandardYoungTableau, n: int | None = None
) -> GeneralizedOscillatingTableau:
    """Embed a standard Young tableau as the all-adds oscillating tableau."""
    if n is None:
        n = max(1, len(t.rows))
    return GeneralizedOscillatingTableau(syt_shape_chain(t), n)


def syt_from_got(got: GeneralizedOscillatingTableau) -> StandardYoungTableau:
    """Inverse of ``got_from_syt`` for tableaux whose steps all add boxes."""
    for before, after in zip(got.shapes, got.shapes[1:]):
        if step_between(before, after)[1] != 1:
            raise BadStep(0, "tableau has a deletion step")
    return syt_from_chain([tuple(x for x in s if x) for s in got.shapes])
