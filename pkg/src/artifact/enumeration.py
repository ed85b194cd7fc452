"""Finite populations of skew shapes for the exhaustive checks."""

from __future__ import annotations

from typing import Iterator

from .shapes import Node, SkewShape, normalize


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing ``rows``-tuples with entries in ``[0, cols]``."""

    def rec(prefix: list[int], cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == rows:
            yield tuple(prefix)
            return
        for part in range(cap, -1, -1):
            prefix.append(part)
            yield from rec(prefix, part)
            prefix.pop()

    return rec([], cols)


def skew_shapes_in_window(rows: int, cols: int, max_nodes: int, e: int,
                          min_nodes: int = 1) -> list[SkewShape]:
    """Every distinct skew shape inside ``[0, rows) x [0, cols)``.

    Any skew shape in the window is ``lam / mu`` for partitions anchored at
    the window's north-west corner, so it suffices to run over such pairs.
    """
    parts = list(partitions_in_box(rows, cols))
    seen: set[frozenset] = set()
    out = []
    for lam in parts:
        size = sum(lam)
        for mu in parts:
            if not min_nodes <= size - sum(mu) <= max_nodes:
                continue
            if any(m > l for m, l in zip(mu, lam)):
                continue
            nodes = frozenset(Node(r, c) for r in range(rows) for c in range(mu[r], lam[r]))
            if nodes not in seen:
                seen.add(nodes)
                out.append(SkewShape(nodes, e))
    out.sort(key=lambda s: (len(s), sorted(s.nodes)))
    return out


def connected_shapes(size: int) -> list[frozenset[Node]]:
    """Connected skew shapes with ``size`` nodes, SW node at the origin.

    Rows are read north to south; each row is an interval that starts weakly
    west of the previous one, ends weakly west of it, and still shares a
    column with it.
    """
    out = []

    def rec(rows: list[tuple[int, int]], left: int) -> None:
        if left == 0:
            out.append(_place(rows))
            return
        a, b = rows[-1]
        for b2 in range(a, b + 1):
            for a2 in range(a, b2 - left, -1):
                rows.append((a2, b2))
                rec(rows, left - (b2 - a2 + 1))
                rows.pop()

    for length in range(1, size + 1):
        rec([(0, length - 1)], size - length)
    return out


def _place(rows: list[tuple[int, int]]) -> frozenset[Node]:
    last = len(rows) - 1
    a_sw = rows[-1][0]
    return frozenset(Node(r - last, c - a_sw) for r, (a, b) in enumerate(rows) for c in range(a, b + 1))


def connected_shapes_up_to(max_size: int, e: int) -> list[SkewShape]:
    """Connected skew shapes up to residue-preserving translation: one per shape and SW residue."""
    out = []
    for n in range(1, max_size + 1):
        for nodes in connected_shapes(n):
            for t in range(e):
                out.append(SkewShape(((r, c + t) for r, c in nodes), e))
    return out


def stacked_shapes_up_to(max_size: int, e: int) -> list[SkewShape]:
    """All skew shapes with at most ``max_size`` nodes, one per e-similarity class."""
    by_size: dict[int, list[SkewShape]] = {}
    for s in connected_shapes_up_to(max_size, e):
        by_size.setdefault(len(s), []).append(s)
    out = []

    def rec(chosen: list[SkewShape], left: int) -> None:
        if chosen:
            out.append(_stack(chosen, e))
        for n in range(1, left + 1):
            for comp in by_size.get(n, []):
                chosen.append(comp)
                rec(chosen, left - n)
                chosen.pop()

    rec([], max_size)
    return out


def _stack(parts: list[SkewShape], e: int) -> SkewShape:
    nodes: set[Node] = set()
    offset = 0
    for p in parts:
        nodes.update(Node(r - offset, c + offset) for r, c in p.nodes)
        offset += (2 * len(p) + 2) * e
    return normalize(SkewShape(nodes, e))

