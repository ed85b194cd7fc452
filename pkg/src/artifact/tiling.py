"""Tilings, tableaux and SE-removable ribbons.

A tableau of a skew shape is an ordering of a tiling in which a node never
lies weakly south-east of a node in a later tile.  The last tile of a
tableau is therefore removable from the south-east side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .preorder import ConvexPreorder
from .roots import KostantPartition, RootVector, alpha, kostant_from_sequence, psi_m
from .shapes import (
    InvalidShapeError,
    Node,
    SkewShape,
    connected_parts,
    is_skew,
    ne_of,
    nodes_content,
    se_of,
)


class TieBreak(enum.Enum):
    """Which equally minimal ribbon to take: least or greatest ``(SW, NE)`` pair."""

    LEAST = "least"
    GREATEST = "greatest"


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Tiling:
    """Tiles listed in a tableau order (north-west first)."""

    tiles: tuple[SkewShape, ...]

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self) -> Iterator[SkewShape]:
        return iter(self.tiles)

    @property
    def tile_set(self) -> frozenset[frozenset[Node]]:
        return frozenset(t.nodes for t in self.tiles)

    def to_json(self) -> dict:
        return {"tiles": [t.to_json() for t in self.tiles], "tableau": list(range(len(self.tiles)))}


@dataclass(frozen=True)
class RemovableRibbon:
    sw: Node
    ne: Node
    ribbon: SkewShape


# ------------------------------------------------------------- tableaux


def is_tableau(host: SkewShape, seq: Sequence[SkewShape]) -> bool:
    """Is ``seq`` an ordered partition of ``host`` into skew shapes obeying the tableau rule?"""
    owner: dict[Node, int] = {}
    for i, tile in enumerate(seq):
        if not tile.nodes or not is_skew(tile.nodes):
            return False
        for u in tile.nodes:
            if u in owner:
                return False
            owner[u] = i
    if set(owner) != set(host.nodes):
        return False
    items = list(owner.items())
    for u, i in items:
        for v, j in items:
            if i > j and se_of(u, v):
                return False
    return True


def is_se_removable(host: frozenset, sub: frozenset) -> bool:
    rest = host - sub
    return not any(se_of(u, v) for u in sub for v in rest)


# ------------------------------------------------------ removable ribbons


def _rem_pairs(nodes: frozenset) -> list[tuple[Node, Node]]:
    pairs = []
    for comp in connected_parts(nodes):
        us = [u for u in comp if (u[0] + 1, u[1]) not in nodes]
        vs = [v for v in comp if (v[0], v[1] + 1) not in nodes]
        pairs.extend((u, v) for u in us for v in vs if ne_of(u, v))
    return pairs


def _xi(nodes: frozenset, u: Node, v: Node) -> frozenset:
    return frozenset(
        w for w in nodes
        if ne_of(u, w) and ne_of(w, v) and (w[0] + 1, w[1] + 1) not in nodes
    )


def removable_ribbons(host: SkewShape) -> list[RemovableRibbon]:
    """Every SE-removable ribbon of ``host``, one per pair in ``Rem``."""
    if not host.nodes:
        raise InvalidShapeError("empty shape")
    host.require_skew()
    out = []
    for u, v in sorted(_rem_pairs(host.nodes)):
        rib = _xi(host.nodes, u, v)
        assert is_se_removable(host.nodes, rib), (u, v)
        out.append(RemovableRibbon(u, v, SkewShape(rib, host.e)))
    return out


@lru_cache(maxsize=None)
def _alpha_coeffs(e: int, t: int, h: int) -> tuple[int, ...]:
    return alpha(e, t, h).coeffs


def _ribbon_coeffs(e: int, u: Node, v: Node) -> tuple[int, ...]:
    return _alpha_coeffs(e, (u[1] - u[0]) % e, u[0] - v[0] + v[1] - u[1] + 1)


def _path_from_sw(ribbon: frozenset) -> list[Node]:
    u = Node(max(r for r, _ in ribbon), min(c for _, c in ribbon))
    path = [u]
    while len(path) < len(ribbon):
        up = Node(u[0] - 1, u[1])
        u = up if up in ribbon else Node(u[0], u[1] + 1)
        path.append(u)
    return path


def delta_subribbon(ribbon: frozenset, e: int) -> frozenset:
    """An SE-removable ribbon of content ``delta`` inside a ribbon of content ``m*delta``.

    Walk the path from the SW end: if the step after the first ``e`` nodes
    goes north, those ``e`` nodes work; otherwise drop them and repeat.
    """
    z = _path_from_sw(ribbon)
    if len(z) % e:
        raise ValueError("ribbon content is not a multiple of delta")
    while len(z) > e:
        if z[e] == Node(z[e - 1][0] - 1, z[e - 1][1]):
            break
        z = z[e:]
    return frozenset(z[:e])


def _minimal(nodes: frozenset, e: int, pre: ConvexPreorder, policy: TieBreak) -> frozenset:
    best: tuple[Node, Node] | None = None
    best_c: tuple[int, ...] = ()
    for u, v in _rem_pairs(nodes):
        c = _ribbon_coeffs(e, u, v)
        if best is None:
            best, best_c = (u, v), c
            continue
        s = pre.compare_coeffs(c, best_c)
        if s < 0:
            best, best_c = (u, v), c
        elif s == 0:
            if (policy is TieBreak.LEAST) == ((u, v) < best):
                best, best_c = (u, v), c
    assert best is not None
    rib = _xi(nodes, *best)
    if len(rib) > e and len(rib) % e == 0:
        rib = delta_subribbon(rib, e)
    return rib


def minimal_se_removable(host: SkewShape, pre: ConvexPreorder,
                         policy: TieBreak = TieBreak.LEAST) -> SkewShape:
    """A preorder-minimal SE-removable ribbon whose content is indivisible."""
    if not host.nodes:
        raise InvalidShapeError("empty shape")
    host.require_skew()
    return SkewShape(_minimal(host.nodes, host.e, pre, policy), host.e)


def minimal_removal_sequence(host: SkewShape, pre: ConvexPreorder,
                             policy: TieBreak = TieBreak.LEAST) -> list[SkewShape]:
    """Repeatedly strip a minimal ribbon; returns ribbons in removal order."""
    nodes = host.nodes
    out = []
    while nodes:
        rib = _minimal(nodes, host.e, pre, policy)
        out.append(SkewShape(rib, host.e))
        nodes = nodes - rib
    return out


# ----------------------------------------------------------- two splits


def _successors(nodes: Sequence[Node]) -> list[list[int]]:
    return [[j for j, v in enumerate(nodes) if j != i and se_of(u, v)] for i, u in enumerate(nodes)]


def up_sets(host: SkewShape) -> Iterator[frozenset[Node]]:
    """All subsets of ``host`` closed under moving south-east, including the trivial ones."""
    order = sorted(host.nodes, key=lambda u: -(u[0] + u[1]))
    succ = _successors(order)
    chosen = [False] * len(order)

    def rec(i: int) -> Iterator[frozenset[Node]]:
        if i == len(order):
            yield frozenset(u for u, c in zip(order, chosen) if c)
            return
        yield from rec(i + 1)
        if all(chosen[j] for j in succ[i]):
            chosen[i] = True
            yield from rec(i + 1)
            chosen[i] = False

    return rec(0)


def enumerate_two_splits(host: SkewShape) -> Iterator[tuple[SkewShape, SkewShape]]:
    """Every two-tile tableau ``(lam1, lam2)`` of ``host``; ``lam2`` is the SE part."""
    full = host.nodes
    for up in up_sets(host):
        if up and up != full:
            yield SkewShape(full - up, host.e), SkewShape(up, host.e)


# ------------------------------------------------------- Kostant tilings


def _kostant_order(masks: Sequence[int], psis: Sequence[tuple[int, ...]],
                   below: Sequence[int], pre: ConvexPreorder) -> list[int] | None:
    """A tableau order with weakly decreasing indivisible parts, if one exists.

    ``below[i]`` is the bitmask of nodes weakly south-east of node ``i``.
    """
    k = len(masks)
    reach = []
    for m in masks:
        r = 0
        while m:
            low = m & -m
            r |= below[low.bit_length() - 1]
            m ^= low
        reach.append(r)
    before = [0] * k  # bitmask over tile indices that must come first
    for a in range(k):
        for b in range(k):
            if a != b and (reach[a] & masks[b] or pre.compare_coeffs(psis[a], psis[b]) > 0):
                before[b] |= 1 << a
    placed: list[int] = []
    done = 0
    while len(placed) < k:
        for i in range(k):
            if not done >> i & 1 and before[i] & ~done == 0:
                placed.append(i)
                done |= 1 << i
                break
        else:
            return None
    return placed


def enumerate_kostant_tilings(host: SkewShape, pre: ConvexPreorder,
                              node_cap: int = 10) -> list[tuple[Tiling, KostantPartition]]:
    """Brute force over all tilings whose tiles have root-multiple content and admit a Kostant tableau."""
    if len(host) > node_cap:
        raise CapExceeded(f"{len(host)} nodes exceeds cap {node_cap}")
    host.require_skew()
    e = host.e
    order = sorted(host.nodes)
    n = len(order)
    below = [sum(1 << j for j, v in enumerate(order) if se_of(u, v)) for u in order]

    def nodes_of(mask: int) -> frozenset[Node]:
        return frozenset(order[i] for i in range(n) if mask >> i & 1)

    psi_of: dict[int, tuple[int, ...]] = {}
    for mask in range(1, 1 << n):
        block = nodes_of(mask)
        if is_skew(block):
            dec = psi_m(RootVector(e, nodes_content(block, e)))
            if dec is not None:
                psi_of[mask] = dec.base.coeffs

    results: list[tuple[Tiling, KostantPartition]] = []
    blocks: list[int] = []

    def rec(remaining: int) -> None:
        if not remaining:
            perm = _kostant_order(blocks, [psi_of[b] for b in blocks], below, pre)
            if perm is not None:
                tiles = tuple(SkewShape(nodes_of(blocks[i]), e) for i in perm)
                seq = [RootVector(e, nodes_content(t.nodes, e)) for t in tiles]
                results.append((Tiling(tiles), kostant_from_sequence(seq, pre)))
            return
        low = remaining & -remaining
        rest = remaining ^ low
        sub = rest
        while True:
            block = sub | low
            if block in psi_of:
                blocks.append(block)
                rec(remaining ^ block)
                blocks.pop()
            if sub == 0:
                break
            sub = (sub - 1) & rest

    rec((1 << n) - 1)
    return results


def union_condition(tiling: Iterable[SkewShape], gamma_tiles: Iterable[SkewShape]) -> bool:
    """Every tile is a union of reference tiles whose content equals the tile's indivisible part."""
    gamma = list(gamma_tiles)
    for tile in tiling:
        dec = psi_m(RootVector(tile.e, nodes_content(tile.nodes, tile.e)))
        if dec is None:
            return False
        inside = [g for g in gamma if g.nodes <= tile.nodes]
        covered = frozenset().union(*(g.nodes for g in inside)) if inside else frozenset()
        if covered != tile.nodes:
            return False
        if any(nodes_content(g.nodes, g.e) != dec.base.coeffs for g in inside):
            return False
    return True
