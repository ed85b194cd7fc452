"""Dilation of skew shapes by imaginary cuspidal ribbons.

For a colour ``t`` the ribbon ``zeta_t = zeta(delta, b_t)`` with ``b_t = (0, t)``
gives two frame vectors: ``x = E(ne - b)`` and ``y = N(ne - b)`` where ``ne``
is its north-east node.  A node ``u`` is sent to ``b - u_row * y + u_col * x``
and then replaced by the ribbon ``zeta(delta, .)`` based there.  The minus
sign makes a step north in ``u`` a translation by ``y`` and a step east a
translation by ``x``, so the diagonal step ``(1, 1)`` is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cuspidal import cuspidal_ribbon, gamma_tiling
from .preorder import ConvexPreorder
from .roots import RootVector
from .shapes import (
    InvalidShapeError,
    Node,
    SkewShape,
    components,
    content,
    extremes,
    normalize,
    residue,
    validate,
)


@dataclass(frozen=True)
class DilationFrame:
    e: int
    t: int
    x: Node
    y: Node
    base: Node
    steps: str  # step string of the imaginary cuspidal ribbon for colour t


@lru_cache(maxsize=256)
def frame(t: int, pre: ConvexPreorder) -> DilationFrame:
    e = pre.e
    t %= e
    base = Node(0, t)
    rib = cuspidal_ribbon(RootVector.delta(e), base, pre)
    _, ne = extremes(rib.shape)
    d = ne - base
    x = Node(d.row, d.col + 1)
    y = Node(d.row - 1, d.col)
    return DilationFrame(e, t, x, y, base, rib.steps)


def phi(f: DilationFrame, u: tuple[int, int]) -> Node:
    return Node(f.base.row - u[0] * f.y.row + u[1] * f.x.row,
                f.base.col - u[0] * f.y.col + u[1] * f.x.col)


def phi_inverse(f: DilationFrame, v: tuple[int, int]) -> Node | None:
    """Solve ``phi(u) = v``; ``None`` when ``v`` is not in the image."""
    dr, dc = v[0] - f.base.row, v[1] - f.base.col
    # columns (-y, x); the determinant is x.col - x.row = e
    det = f.x.row * f.y.col - f.y.row * f.x.col
    a = dr * f.x.col - dc * f.x.row
    b = dc * -f.y.row + f.y.col * dr
    if a % det or b % det:
        return None
    return Node(a // det, b // det)


def dilate_node(f: DilationFrame, u: tuple[int, int]) -> list[Node]:
    start = phi(f, u)
    out = [start]
    for step in f.steps:
        last = out[-1]
        out.append(Node(last.row - 1, last.col) if step == "N" else Node(last.row, last.col + 1))
    return out


def dilate(t: int, s: SkewShape, pre: ConvexPreorder) -> SkewShape:
    """Replace each node of ``s`` by its imaginary cuspidal ribbon of colour ``t``."""
    if not validate(s.nodes).skew:
        raise InvalidShapeError(f"not a skew shape: {sorted(s.nodes)}")
    f = frame(t, pre)
    out: set[Node] = set()
    for u in s.nodes:
        out.update(dilate_node(f, u))
    return SkewShape(out, pre.e)


def undilate(s: SkewShape, pre: ConvexPreorder) -> tuple[int, SkewShape] | None:
    """Recover ``(t, core)`` with ``dilate(t, core) == s``, if possible."""
    e = pre.e
    if not s.nodes or len(s) % e or not validate(s.nodes).skew:
        return None
    tiles = gamma_tiling(s, pre).tiles
    delta = RootVector.delta(e)
    if any(content(g) != delta for g in tiles):
        return None
    bases = [extremes(g)[0] for g in tiles]
    colours = {residue(b, e) for b in bases}
    if len(colours) != 1:
        return None
    t = colours.pop()
    f = frame(t, pre)
    core = []
    for b in bases:
        u = phi_inverse(f, b)
        if u is None:
            return None
        core.append(u)
    core_shape = SkewShape(core, e)
    if not validate(core).skew or dilate(t, core_shape, pre).nodes != s.nodes:
        return None
    return t, core_shape


def build_imaginary_semicuspidal(parts: Sequence[tuple[SkewShape, int]], pre: ConvexPreorder) -> SkewShape:
    """Stack the dilations of connected shapes, each with its own colour, in normal form.

    Parts are listed south-west first.
    """
    e = pre.e
    pieces = []
    for i, (shape, colour) in enumerate(parts):
        if not validate(shape.nodes).connected or not validate(shape.nodes).skew:
            raise InvalidShapeError(f"component {i} is not a nonempty connected skew shape")
        pieces.append(normalize(dilate(colour, shape, pre)))
    # place far apart along the anti-diagonal, then let normalize fix spacing
    out: set[Node] = set()
    offset = 0
    for p in pieces:
        span = max(max(r for r, _ in p.nodes) - min(r for r, _ in p.nodes),
                   max(c for _, c in p.nodes) - min(c for _, c in p.nodes)) + 1
        out.update((r - offset, c + offset) for r, c in p.nodes)
        offset += (span + 1) * e
    return normalize(SkewShape(out, e))


def core_components(s: SkewShape, pre: ConvexPreorder) -> list[tuple[int, SkewShape]] | None:
    """Undilate each connected component; ``None`` if any fails."""
    out = []
    for comp in components(s):
        got = undilate(comp, pre)
        if got is None:
            return None
        t, core = got
        sw, _ = extremes(core)
        out.append((t, core.translate((-sw.row, -sw.col))))
    return out
