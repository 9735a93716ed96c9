"""Webs grown from dominant strings.

A web is a planar bipartite graph drawn in a disk: boundary vertices of
degree one sit on the rim in clockwise order, internal vertices have degree
three, and every edge carries a state label 1, 0 or -1.  The embedding is
stored as a combinatorial map — a counterclockwise cyclic order of
half-edges at each vertex.  Edge ``i`` owns the half-edges ``2*i`` (leaving
its first endpoint) and ``2*i + 1`` (leaving its second), so a half-edge's
twin is ``h ^ 1``.

``grow_web`` builds the web of a dominant string by repeatedly closing
adjacent dangling edges with one of fourteen local rules; the result is
independent of the order in which rules fire, which ``grow_order_independent``
checks by growing leftmost-first and rightmost-first and comparing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InternalError,
    NoRuleApplicable,
    NotBoundaryVertex,
    NotDominant,
    ValidationError,
)
from .strings import (
    BLACK,
    WHITE,
    Entry,
    STATES,
    fork_extend_string,
    is_dominant,
    validate_string,
)

POLICIES = ("leftmost-first", "rightmost-first")

# Local rules on an adjacent pair of dangling edges, keyed by their tags
# (state label, color of the attached vertex).  A merge closes both onto one
# new vertex of the opposite color and leaves one new dangling edge; an
# h-move closes them onto two new vertices joined by a horizontal edge and
# leaves two; a cap joins the pair into a single edge.

MERGE_RULES = {
    ((1, BLACK), (0, BLACK)): -1,
    ((0, BLACK), (-1, BLACK)): 1,
    ((1, BLACK), (-1, BLACK)): 0,
    ((-1, WHITE), (0, WHITE)): 1,
    ((0, WHITE), (1, WHITE)): -1,
    ((-1, WHITE), (1, WHITE)): 0,
}

H_RULES = {
    # (left tag, right tag): (horizontal label, new left state, new right state)
    ((1, BLACK), (0, WHITE)): (-1, 0, 1),
    ((0, BLACK), (0, WHITE)): (-1, 1, 1),
    ((0, BLACK), (1, WHITE)): (-1, 1, 0),
    ((-1, WHITE), (0, BLACK)): (1, 0, -1),
    ((0, WHITE), (0, BLACK)): (1, -1, -1),
    ((0, WHITE), (-1, BLACK)): (1, -1, 0),
}

CAP_RULES = {((1, BLACK), (1, WHITE)), ((-1, WHITE), (-1, BLACK))}


def _other_color(color: str) -> str:
    return WHITE if color == BLACK else BLACK


def _twin(h: int) -> int:
    return h ^ 1


class Web:
    """A labeled planar web with its boundary order and rotation system."""

    __slots__ = ("colors", "boundary", "edges", "rotation", "source_string")

    def __init__(
        self,
        colors: dict[int, str],
        boundary: Sequence[int],
        edges: Iterable[tuple[int, int, int]],
        rotation: dict[int, Sequence[int]],
        source_string: Sequence[Entry] | None = None,
    ):
        self.colors = dict(colors)
        self.boundary = tuple(boundary)
        self.edges = tuple((a, b, label) for a, b, label in edges)
        self.rotation = {v: tuple(halves) for v, halves in rotation.items()}
        self.source_string = (
            None if source_string is None else validate_string(source_string)
        )

    @property
    def k(self) -> int:
        return len(self.boundary)

    @property
    def internal(self) -> tuple[int, ...]:
        on_rim = set(self.boundary)
        return tuple(v for v in self.colors if v not in on_rim)

    def is_boundary(self, v: int) -> bool:
        return v in set(self.boundary)

    def origin(self, h: int) -> int:
        a, b, _ = self.edges[h // 2]
        return a if h % 2 == 0 else b

    def head(self, h: int) -> int:
        return self.origin(_twin(h))

    def label(self, h: int) -> int:
        return self.edges[h // 2][2]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def __eq__(self, other) -> bool:
        if isinstance(other, Web):
            return (
                self.colors == other.colors
                and self.boundary == other.boundary
                and self.edges == other.edges
                and self.rotation == other.rotation
            )
        return NotImplemented

    def __repr__(self) -> str:
        return (
            f"Web(k={self.k}, internal={len(self.colors) - self.k}, "
            f"edges={len(self.edges)})"
        )

    def to_json(self) -> dict:
        on_rim = set(self.boundary)
        return {
            "vertices": [
                {"id": v, "color": self.colors[v], "boundary": v in on_rim}
                for v in sorted(self.colors)
            ],
            "edges": [
                {"a": a, "b": b, "label": label} for a, b, label in self.edges
            ],
            "rotation": {
                str(v): [h // 2 for h in halves]
                for v, halves in sorted(self.rotation.items())
            },
            "boundary": list(self.boundary),
            "leftmost": self.boundary[0] if self.boundary else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Web":
        try:
            colors = {int(item["id"]): item["color"] for item in data["vertices"]}
            flags = {int(item["id"]): bool(item["boundary"]) for item in data["vertices"]}
            edges = [
                (int(item["a"]), int(item["b"]), int(item["label"]))
                for item in data["edges"]
            ]
            boundary = [int(v) for v in data["boundary"]]
            raw_rotation = {int(v): list(ids) for v, ids in data["rotation"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed web data: {exc}") from None
        if set(flags) != set(colors):
            raise ValidationError("vertex lists disagree")
        if set(boundary) != {v for v in colors if flags[v]}:
            raise ValidationError("boundary flags do not match the boundary list")
        leftmost = data.get("leftmost")
        if boundary and leftmost is not None and int(leftmost) != boundary[0]:
            raise ValidationError(
                f"leftmost vertex {leftmost} is not first in the boundary list"
            )
        rotation = {}
        for v, edge_ids in raw_rotation.items():
            halves = []
            for e in edge_ids:
                if not 0 <= e < len(edges):
                    raise ValidationError(f"vertex {v} lists unknown edge {e}")
                a, b, _ = edges[e]
                if a == v:
                    halves.append(2 * e)
                elif b == v:
                    halves.append(2 * e + 1)
                else:
                    raise ValidationError(f"edge {e} is not incident to vertex {v}")
            rotation[v] = halves
        return validate_web(cls(colors, boundary, edges, rotation))


# ---------------------------------------------------------------------------
# Growth.


def grow_web(string: Sequence[Entry], policy: str = "leftmost-first") -> Web:
    """The web of a dominant string.

    Starts with one dangling edge per string entry and repeatedly applies the
    first local rule found scanning the dangling edges left to right (or
    right to left under the other policy) until none remain.
    """
    string = validate_string(string)
    if policy not in POLICIES:
        raise ValidationError(f"unknown policy {policy!r}; use one of {POLICIES}")
    if not is_dominant(string):
        raise NotDominant(f"{len(string)}-entry string does not grow into a web")

    k = len(string)
    colors = {i: color for i, (_, color) in enumerate(string)}
    edges: list[list] = []  # [top vertex, bottom vertex or None, label]
    rotation: dict[int, list[int]] = {}
    frontier: list[int] = []  # dangling edge indices, left to right
    for i, (state, _) in enumerate(string):
        edges.append([i, None, state])
        rotation[i] = [2 * i]
        frontier.append(i)

    def tag(e: int) -> tuple[int, str]:
        return edges[e][2], colors[edges[e][0]]

    next_vertex = k
    for _ in range(4 * k * k + 16):
        if not frontier:
            break
        positions = range(len(frontier) - 1)
        if policy == "rightmost-first":
            positions = reversed(positions)
        for i in positions:
            pair = (tag(frontier[i]), tag(frontier[i + 1]))
            if pair in MERGE_RULES or pair in H_RULES or pair in CAP_RULES:
                break
        else:
            raise NoRuleApplicable(tuple(tag(e) for e in frontier))

        left_edge, right_edge = frontier[i], frontier[i + 1]
        pair = (tag(left_edge), tag(right_edge))
        if pair in MERGE_RULES:
            new_state = MERGE_RULES[pair]
            vertex = next_vertex
            next_vertex += 1
            colors[vertex] = _other_color(pair[0][1])
            edges[left_edge][1] = vertex
            edges[right_edge][1] = vertex
            new_edge = len(edges)
            edges.append([vertex, None, new_state])
            rotation[vertex] = [
                2 * left_edge + 1, 2 * new_edge, 2 * right_edge + 1,
            ]
            frontier[i : i + 2] = [new_edge]
        elif pair in H_RULES:
            horizontal, new_left_state, new_right_state = H_RULES[pair]
            left_vertex, right_vertex = next_vertex, next_vertex + 1
            next_vertex += 2
            colors[left_vertex] = _other_color(pair[0][1])
            colors[right_vertex] = _other_color(pair[1][1])
            edges[left_edge][1] = left_vertex
            edges[right_edge][1] = right_vertex
            middle = len(edges)
            edges.append([left_vertex, right_vertex, horizontal])
            new_left = len(edges)
            edges.append([left_vertex, None, new_left_state])
            new_right = len(edges)
            edges.append([right_vertex, None, new_right_state])
            rotation[left_vertex] = [2 * left_edge + 1, 2 * new_left, 2 * middle]
            rotation[right_vertex] = [
                2 * middle + 1, 2 * new_right, 2 * right_edge + 1,
            ]
            frontier[i : i + 2] = [new_left, new_right]
        else:
            # Cap: fuse the two dangling edges into one edge between their
            # attached vertices.
            assert edges[left_edge][2] == edges[right_edge][2]
            top_right = edges[right_edge][0]
            edges[left_edge][1] = top_right
            spot = rotation[top_right].index(2 * right_edge)
            rotation[top_right][spot] = 2 * left_edge + 1
            edges[right_edge] = None
            frontier[i : i + 2] = []
    if frontier:
        raise InternalError(f"growth did not finish for {string!r}")

    # Drop the edge slots freed by caps and renumber half-edges.
    keep = [e for e, slot in enumerate(edges) if slot is not None]
    remap = {old: new for new, old in enumerate(keep)}
    final_edges = [tuple(edges[old]) for old in keep]
    final_rotation = {
        v: [2 * remap[h // 2] + (h % 2) for h in halves]
        for v, halves in rotation.items()
    }
    return Web(colors, range(k), final_edges, final_rotation, string)


def grow_order_independent(
    string: Sequence[Entry], policy: str = "leftmost-first"
) -> Web:
    """Grow under both scanning policies, insist the webs agree, and return
    the one grown under ``policy``."""
    leftmost = grow_web(string, "leftmost-first")
    rightmost = grow_web(string, "rightmost-first")
    if _canonical(leftmost, labeled=True) != _canonical(rightmost, labeled=True):
        raise InternalError(
            f"growth policies disagree on {validate_string(string)!r}"
        )
    return leftmost if policy == "leftmost-first" else rightmost


def boundary_string(web: Web) -> tuple[Entry, ...]:
    """Read the string back off the boundary: each boundary vertex
    contributes (label of its edge, its color)."""
    out = []
    for v in web.boundary:
        if web.degree(v) != 1:
            raise ValidationError(f"boundary vertex {v} has degree {web.degree(v)}")
        out.append((web.label(web.rotation[v][0]), web.colors[v]))
    return tuple(out)


def fork_extend(web: Web) -> Web:
    """The web of the fork-extended boundary string; replacing each minority
    color boundary vertex by a fork of the other color regrows to this."""
    return grow_web(fork_extend_string(boundary_string(web)))


# ---------------------------------------------------------------------------
# Faces.


@dataclass(frozen=True)
class Face:
    """One face of the disk, walked with the face on the left.  Virtual arcs
    along the rim between consecutive boundary vertices count toward
    ``sides`` but carry no label."""

    vertices: tuple[int, ...]
    sides: int
    arc_count: int

    @property
    def is_internal(self) -> bool:
        return self.arc_count == 0

    @property
    def is_outer(self) -> bool:
        return self.arc_count == self.sides


def faces(web: Web) -> list[Face]:
    """All faces of the web, including those against the rim and the single
    outer face, via the rotation system extended with rim arcs."""
    base = 2 * len(web.edges)
    k = web.k
    rotation: dict[int, tuple[int, ...]] = dict(web.rotation)
    origin: dict[int, int] = {}
    for j in range(k):
        origin[base + 2 * j] = web.boundary[j]
        origin[base + 2 * j + 1] = web.boundary[(j + 1) % k]
    for j, v in enumerate(web.boundary):
        to_next = base + 2 * j
        to_prev = base + 2 * ((j - 1) % k) + 1
        rotation[v] = (to_next, to_prev) + tuple(web.rotation[v])

    def head(h: int) -> int:
        t = _twin(h)
        return origin[t] if t >= base else web.origin(t)

    position = {}
    for v, halves in rotation.items():
        for i, h in enumerate(halves):
            position[h] = (v, i)

    seen = set()
    out = []
    for start in sorted(position):
        if start in seen:
            continue
        orbit = []
        h = start
        while h not in seen:
            seen.add(h)
            orbit.append(h)
            v, i = position[_twin(h)]
            h = rotation[v][(i + 1) % len(rotation[v])]
        if h != start:
            raise InternalError("face walk did not close up")
        out.append(
            Face(
                vertices=tuple(
                    origin[x] if x >= base else web.origin(x) for x in orbit
                ),
                sides=len(orbit),
                arc_count=sum(1 for x in orbit if x >= base),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Validation.


def validate_web(web: Web) -> Web:
    """Check degrees, colors, labels, the rotation system, reachability, and
    that every internal face has at least six sides."""
    for v, color in web.colors.items():
        if color not in (BLACK, WHITE):
            raise ValidationError(f"vertex {v} has color {color!r}")
    if len(set(web.boundary)) != len(web.boundary):
        raise ValidationError("boundary lists a vertex twice")
    incident: dict[int, list[int]] = {v: [] for v in web.colors}
    for e, (a, b, label) in enumerate(web.edges):
        for v in (a, b):
            if v not in web.colors:
                raise ValidationError(f"edge {e} touches unknown vertex {v}")
        if {web.colors[a], web.colors[b]} != {BLACK, WHITE}:
            raise ValidationError(f"edge {e} joins two {web.colors[a]} vertices")
        if label not in STATES:
            raise ValidationError(f"edge {e} has label {label!r}")
        incident[a].append(2 * e)
        incident[b].append(2 * e + 1)
    on_rim = set(web.boundary)
    if set(web.rotation) != set(web.colors):
        raise ValidationError("rotation and vertex set disagree")
    for v, halves in web.rotation.items():
        if sorted(halves) != sorted(incident[v]):
            raise ValidationError(f"rotation at vertex {v} is not its star")
        if v in on_rim:
            if len(halves) != 1:
                raise ValidationError(f"boundary vertex {v} has degree {len(halves)}")
        else:
            if len(halves) != 3:
                raise ValidationError(f"internal vertex {v} has degree {len(halves)}")
            if sorted(web.label(h) for h in halves) != [-1, 0, 1]:
                raise ValidationError(
                    f"internal vertex {v} does not see all three labels"
                )
    if web.source_string is not None:
        if boundary_string(web) != web.source_string:
            raise ValidationError("boundary does not spell the source string")
    if on_rim:
        reached = set(on_rim)
        queue = deque(on_rim)
        while queue:
            v = queue.popleft()
            for h in web.rotation[v]:
                u = web.head(h)
                if u not in reached:
                    reached.add(u)
                    queue.append(u)
        if reached != set(web.colors):
            raise ValidationError("web has vertices not connected to the boundary")
    elif web.colors:
        raise ValidationError("web without boundary cannot have vertices")
    for face in faces(web):
        if face.is_internal and face.sides < 6:
            raise ValidationError(f"internal face with only {face.sides} sides")
    return web


# ---------------------------------------------------------------------------
# Cuts.


def _cut(web: Web, vertex: int, left: bool) -> int:
    if vertex not in set(web.boundary):
        raise NotBoundaryVertex(vertex)
    d = web.rotation[vertex][0]
    u = web.head(d)
    on_rim = set(web.boundary)
    turn_left = left
    for _ in range(2 * len(web.edges) + 1):
        if u in on_rim:
            return u
        halves = web.rotation[u]
        i = halves.index(_twin(d))
        # Turns alternate along the walk: a left cut turns left at the first
        # vertex met, right at the second, and so on; a left turn leaves by
        # the previous half-edge counterclockwise, a right turn by the next.
        d = halves[(i - 1) % 3] if turn_left else halves[(i + 1) % 3]
        turn_left = not turn_left
        u = web.head(d)
    raise InternalError(f"cut from vertex {vertex} does not reach the boundary")


def left_cut(web: Web, vertex: int) -> int:
    """Walk into the web from a boundary vertex, bending left; returns the
    boundary vertex where the walk exits."""
    return _cut(web, vertex, left=True)


def right_cut(web: Web, vertex: int) -> int:
    """Same walk bending right."""
    return _cut(web, vertex, left=False)


# ---------------------------------------------------------------------------
# Components, rotation, isomorphism.


def contains_identity_component(web: Web) -> bool:
    """Whether some edge joins two boundary vertices (a bare strand)."""
    on_rim = set(web.boundary)
    return any(a in on_rim and b in on_rim for a, b, _ in web.edges)


def rotate_web(web: Web) -> Web:
    """Move the leftmost boundary vertex to the right end of the boundary
    order, leaving the underlying graph untouched."""
    if web.k == 0:
        return Web(web.colors, web.boundary, web.edges, web.rotation)
    boundary = web.boundary[1:] + web.boundary[:1]
    return Web(web.colors, boundary, web.edges, web.rotation)


def _canonical(web: Web, labeled: bool = False):
    """Canonical encoding: number vertices by a breadth-first search seeded
    with the boundary in order, walking each rotation from an anchor (the
    half-edge by which the vertex was discovered), then list colors and
    adjacencies in canonical ids, optionally with edge labels."""
    order: dict[int, int] = {}
    anchor: dict[int, int] = {}
    sequence: list[int] = []
    queue: deque[int] = deque()
    for i, v in enumerate(web.boundary):
        order[v] = i
        anchor[v] = web.rotation[v][0] if web.rotation[v] else -1
        queue.append(v)
    while queue:
        v = queue.popleft()
        sequence.append(v)
        halves = web.rotation[v]
        if not halves:
            continue
        start = halves.index(anchor[v])
        for t in range(len(halves)):
            h = halves[(start + t) % len(halves)]
            u = web.head(h)
            if u not in order:
                order[u] = len(order)
                anchor[u] = _twin(h)
                queue.append(u)
    encoded = []
    for v in sequence:
        halves = web.rotation[v]
        start = halves.index(anchor[v]) if halves else 0
        around = [halves[(start + t) % len(halves)] for t in range(len(halves))]
        if labeled:
            adjacency = tuple((web.label(h), order[web.head(h)]) for h in around)
        else:
            adjacency = tuple(order[web.head(h)] for h in around)
        encoded.append((web.colors[v], adjacency))
    return web.k, len(web.edges), len(web.colors) - len(order), tuple(encoded)


def canonical_form(web: Web, labeled: bool = False):
    """Hashable encoding deciding web isomorphism: two webs compare equal
    under ``webs_equal`` exactly when their canonical forms coincide."""
    return _canonical(web, labeled=labeled)


def webs_equal(a: Web, b: Web) -> bool:
    """Isomorphism of embedded webs matching the boundary orders.

    Edge state labels are ignored: they describe the growth that produced a
    web and are recoverable from the embedding, so two webs that differ only
    in labels are the same web."""
    if a.k != b.k or len(a.colors) != len(b.colors) or len(a.edges) != len(b.edges):
        return False
    return _canonical(a) == _canonical(b)
