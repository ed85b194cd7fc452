"""Nodes, skew shapes and their structural predicates.

Nodes are ``(row, col)`` pairs with rows growing southward and columns
eastward.  The residue of a node is ``(col - row) mod e``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .roots import RootVector


class Node(NamedTuple):
    row: int
    col: int

    def __add__(self, other: tuple[int, int]) -> Node:  # type: ignore[override]
        return Node(self.row + other[0], self.col + other[1])

    def __sub__(self, other: tuple[int, int]) -> Node:
        return Node(self.row - other[0], self.col - other[1])

    @property
    def diag(self) -> int:
        return self.col - self.row


N = (-1, 0)
E = (0, 1)
S = (1, 0)
W = (0, -1)
SE = (1, 1)
NW = (-1, -1)


def residue(u: tuple[int, int], e: int) -> int:
    return (u[1] - u[0]) % e


def se_of(u: tuple[int, int], v: tuple[int, int]) -> bool:
    """``u ↘ v``: ``v`` weakly south-east of ``u``."""
    return v[0] >= u[0] and v[1] >= u[1]


def ne_of(u: tuple[int, int], v: tuple[int, int]) -> bool:
    """``u ↗ v``: ``v`` weakly north-east of ``u``."""
    return v[0] <= u[0] and v[1] >= u[1]


def dist(u: tuple[int, int], v: tuple[int, int]) -> int:
    """Lattice (taxicab) distance; one less than the shortest path length."""
    return abs(v[0] - u[0]) + abs(v[1] - u[1])


class InvalidShapeError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class ShapeClass:
    skew: bool
    thin: bool
    connected: bool
    cornered: bool
    diagonal_convex: bool
    ribbon: bool
    young: bool


@dataclass(frozen=True)
class SkewShape:
    """A finite node set together with the residue modulus ``e``.

    Nothing is asserted at construction time; use :func:`validate` or
    :meth:`require_skew`.
    """

    nodes: frozenset[Node]
    e: int

    def __init__(self, nodes: Iterable[tuple[int, int]], e: int) -> None:
        object.__setattr__(self, "nodes", frozenset(Node(int(r), int(c)) for r, c in nodes))
        object.__setattr__(self, "e", int(e))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Node]:
        return iter(sorted(self.nodes))

    def __contains__(self, u: object) -> bool:
        return u in self.nodes

    def __bool__(self) -> bool:
        return bool(self.nodes)

    def __repr__(self) -> str:
        return f"SkewShape({sorted(self.nodes)}, e={self.e})"

    def residue(self, u: tuple[int, int]) -> int:
        return residue(u, self.e)

    def with_nodes(self, nodes: Iterable[tuple[int, int]]) -> SkewShape:
        return SkewShape(nodes, self.e)

    def __or__(self, other: SkewShape) -> SkewShape:
        return SkewShape(self.nodes | other.nodes, self.e)

    def __sub__(self, other: SkewShape) -> SkewShape:
        return SkewShape(self.nodes - other.nodes, self.e)

    def translate(self, c: tuple[int, int]) -> SkewShape:
        return SkewShape(((r + c[0], k + c[1]) for r, k in self.nodes), self.e)

    def classify(self) -> ShapeClass:
        return validate(self.nodes)

    def require_skew(self) -> SkewShape:
        if not is_skew(self.nodes):
            raise InvalidShapeError(f"not a skew shape: {sorted(self.nodes)}")
        return self

    def to_json(self) -> dict:
        return {"nodes": [list(u) for u in sorted(self.nodes)]}


# ------------------------------------------------------------ predicates


def is_skew(nodes: frozenset | set) -> bool:
    """Betweenness closure, checked via the SE-cone and NW-cone of ``nodes``."""
    if not nodes:
        return True
    r0 = min(r for r, _ in nodes)
    r1 = max(r for r, _ in nodes)
    c0 = min(c for _, c in nodes)
    c1 = max(c for _, c in nodes)
    width = c1 - c0 + 1
    below = [[False] * width for _ in range(r1 - r0 + 1)]  # some node is weakly NW
    for r in range(r0, r1 + 1):
        row = below[r - r0]
        prev = below[r - r0 - 1] if r > r0 else None
        for c in range(c0, c1 + 1):
            j = c - c0
            row[j] = (r, c) in nodes or (j > 0 and row[j - 1]) or (prev is not None and prev[j])
    above = [[False] * width for _ in range(r1 - r0 + 1)]  # some node is weakly SE
    for r in range(r1, r0 - 1, -1):
        row = above[r - r0]
        nxt = above[r - r0 + 1] if r < r1 else None
        for c in range(c1, c0 - 1, -1):
            j = c - c0
            row[j] = (r, c) in nodes or (j < width - 1 and row[j + 1]) or (nxt is not None and nxt[j])
            if row[j] and below[r - r0][j] and (r, c) not in nodes:
                return False
    return True


def is_thin(nodes: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for r, c in nodes:
        if c - r in seen:
            return False
        seen.add(c - r)
    return True


def connected_parts(nodes: Iterable[tuple[int, int]]) -> list[frozenset[Node]]:
    todo = set(nodes)
    parts = []
    while todo:
        start = todo.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            r, c = queue.popleft()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in todo:
                    todo.discard(nb)
                    comp.add(nb)
                    queue.append(nb)
        parts.append(frozenset(Node(*u) for u in comp))
    return parts


def is_connected(nodes: frozenset | set) -> bool:
    return bool(nodes) and len(connected_parts(nodes)) == 1


def is_cornered(nodes: frozenset | set) -> bool:
    sw = sum(1 for r, c in nodes if (r + 1, c) not in nodes and (r, c - 1) not in nodes)
    ne = sum(1 for r, c in nodes if (r - 1, c) not in nodes and (r, c + 1) not in nodes)
    return sw <= 1 and ne <= 1


def is_diagonal_convex(nodes: Iterable[tuple[int, int]]) -> bool:
    rows_by_diag: dict[int, list[int]] = {}
    for r, c in nodes:
        rows_by_diag.setdefault(c - r, []).append(r)
    for rows in rows_by_diag.values():
        if max(rows) - min(rows) + 1 != len(rows):
            return False
    return True


def validate(nodes: Iterable[tuple[int, int]]) -> ShapeClass:
    ns = frozenset((int(r), int(c)) for r, c in nodes)
    skew = is_skew(ns)
    thin = is_thin(ns)
    conn = is_connected(ns)
    young = skew and (not ns or (min(r for r, _ in ns), min(c for _, c in ns)) in ns)
    return ShapeClass(
        skew=skew,
        thin=thin,
        connected=conn,
        cornered=is_cornered(ns),
        diagonal_convex=is_diagonal_convex(ns),
        ribbon=bool(ns) and thin and conn and skew,
        young=young,
    )


# ------------------------------------------------------------ operations


def content(s: SkewShape) -> RootVector:
    counts = [0] * s.e
    for r, c in s.nodes:
        counts[(c - r) % s.e] += 1
    return RootVector(s.e, tuple(counts))


def nodes_content(nodes: Iterable[tuple[int, int]], e: int) -> tuple[int, ...]:
    counts = [0] * e
    for r, c in nodes:
        counts[(c - r) % e] += 1
    return tuple(counts)


def components(s: SkewShape) -> list[SkewShape]:
    """Connected components ordered from south-west to north-east."""
    s.require_skew()
    parts = connected_parts(s.nodes)
    parts.sort(key=lambda p: min(c for _, c in p))
    return [SkewShape(p, s.e) for p in parts]


def extremes(s: SkewShape) -> tuple[Node, Node]:
    """The unique south-west-most and north-east-most nodes."""
    if not s.nodes:
        raise InvalidShapeError("empty shape has no extreme nodes")
    sw = Node(max(r for r, _ in s.nodes), min(c for _, c in s.nodes))
    ne = Node(min(r for r, _ in s.nodes), max(c for _, c in s.nodes))
    if sw not in s.nodes or ne not in s.nodes:
        raise InvalidShapeError(f"not a skew shape: {sorted(s.nodes)}")
    return sw, ne


def from_skew_partition(lam: Sequence[int], mu: Sequence[int], charge: int, e: int) -> SkewShape:
    """Node set of ``lam / mu`` (1-indexed rows and columns) shifted east by ``charge``."""
    lam, mu = list(lam), list(mu)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
        raise InvalidShapeError("partitions must be weakly decreasing")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise InvalidShapeError(f"{mu} is not contained in {lam}")
    mu = mu + [0] * (len(lam) - len(mu))
    nodes = [(r, c + charge) for r in range(1, len(lam) + 1) for c in range(mu[r - 1] + 1, lam[r - 1] + 1)]
    return SkewShape(nodes, e).require_skew()


def reverse(s: SkewShape) -> SkewShape:
    return SkewShape(((-c, -r) for r, c in s.nodes), s.e)


def _normal_component(nodes: frozenset[Node], e: int) -> frozenset[Node]:
    sw_r = max(r for r, _ in nodes)
    sw_c = min(c for _, c in nodes)
    dr = -sw_r
    dc = (sw_c - sw_r) % e - sw_c
    return frozenset(Node(r + dr, c + dc) for r, c in nodes)


def normalize(s: SkewShape) -> SkewShape:
    """Canonical representative of the e-similarity class of ``s``.

    Each component is moved by a residue-preserving translation so its SW
    node sits in row 0 with column in ``[0, e)``; later components are then
    stacked just north-east of the previous one, shifted east by the least
    amount that restores their residues.
    """
    if not s.nodes:
        return s
    out: set[Node] = set()
    anchor: Node | None = None
    for comp in components(s):
        base = _normal_component(comp.nodes, s.e)
        if anchor is not None:
            sw_col = min(c for _, c in base)  # row 0 holds the SW node
            target = Node(anchor.row - 1, anchor.col + 1)
            shift = (sw_col - target.diag) % s.e
            dr, dc = target.row, target.col + shift - sw_col
            base = frozenset(Node(r + dr, c + dc) for r, c in base)
        out |= base
        anchor = Node(min(r for r, _ in base), max(c for _, c in base))
    return SkewShape(out, s.e)


def e_similar(a: SkewShape, b: SkewShape) -> bool:
    if a.e != b.e:
        return False
    return normalize(a).nodes == normalize(b).nodes


def ribbon_path(r: SkewShape) -> str:
    """The N/E step string from the SW node to the NE node of a ribbon."""
    if not validate(r.nodes).ribbon:
        raise InvalidShapeError(f"not a ribbon: {sorted(r.nodes)}")
    u, _ = extremes(r)
    steps = []
    for _ in range(len(r) - 1):
        up = Node(u.row - 1, u.col)
        if up in r.nodes:
            steps.append("N")
            u = up
        else:
            u = Node(u.row, u.col + 1)
            steps.append("E")
    return "".join(steps)


def path_nodes(start: tuple[int, int], steps: str) -> list[Node]:
    """Nodes visited by an N/E step string from ``start``."""
    u = Node(*start)
    out = [u]
    for step in steps:
        u = u + (N if step == "N" else E)
        out.append(u)
    return out


def ribbon_from_path(start: tuple[int, int], steps: str, e: int) -> SkewShape:
    if set(steps) - {"N", "E"}:
        raise ValueError(f"steps must use only N and E: {steps!r}")
    return SkewShape(path_nodes(start, steps), e)
