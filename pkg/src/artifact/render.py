"""ASCII and SVG pictures of shapes and tilings.

Row 0 is drawn at the top, so a row further south appears lower down.
Drawings with the row axis pointing up appear flipped relative to this.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Sequence

from .cuspidal import GammaTiling
from .roots import format_root
from .shapes import SkewShape, content

DEFAULT_PALETTE = (
    "#f4a6a6", "#a6c8f4", "#b8e6a1", "#f4d8a6", "#d3b5f0",
    "#a6ece6", "#f0b5d8", "#d9d9a0", "#c0c0c0", "#f7c59f",
)
_LABELS = string.ascii_uppercase + string.ascii_lowercase
_ANSI = (41, 44, 42, 43, 45, 46, 101, 104, 102, 103)


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"
    cell_size: int = 30
    palette: tuple[str, ...] = field(default=DEFAULT_PALETTE)
    show_residues: bool = True
    color: bool = False  # ANSI backgrounds in ASCII output

    def __post_init__(self) -> None:
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.cell_size < 1:
            raise ValueError("cell_size must be positive")
        if not self.palette:
            raise ValueError("palette must not be empty")


def _residue_char(r: int) -> str:
    return (string.digits + string.ascii_lowercase)[r] if r < 36 else "?"


def _bounds(nodes) -> tuple[int, int, int, int]:
    return (min(r for r, _ in nodes), max(r for r, _ in nodes),
            min(c for _, c in nodes), max(c for _, c in nodes))


def _ascii(shape: SkewShape, owner: dict | None, opts: RenderOptions) -> str:
    if not shape.nodes:
        return ""
    r0, r1, c0, c1 = _bounds(shape.nodes)
    lines = []
    for r in range(r0, r1 + 1):
        cells = []
        for c in range(c0, c1 + 1):
            if (r, c) not in shape.nodes:
                cells.append("." * (2 if owner is not None and opts.show_residues else 1))
                continue
            res = _residue_char(shape.residue((r, c))) if opts.show_residues else ""
            text = res
            if owner is not None:
                idx = owner[(r, c)]
                text = _LABELS[idx % len(_LABELS)] + res
                if opts.color:
                    text = f"\x1b[{_ANSI[idx % len(_ANSI)]}m{text}\x1b[0m"
            cells.append(text or "#")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _svg(shape: SkewShape, owner: dict | None, opts: RenderOptions, legend: Sequence[str] = ()) -> str:
    k = opts.cell_size
    if shape.nodes:
        r0, r1, c0, c1 = _bounds(shape.nodes)
    else:
        r0 = r1 = c0 = c1 = 0
    width = (c1 - c0 + 1) * k + 2
    height = (r1 - r0 + 1) * k + 2 + len(legend) * (k // 2 + 4)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
    ]
    for r, c in sorted(shape.nodes):
        x, y = (c - c0) * k + 1, (r - r0) * k + 1
        fill = "#ffffff" if owner is None else opts.palette[owner[(r, c)] % len(opts.palette)]
        out.append(f'<rect x="{x}" y="{y}" width="{k}" height="{k}" fill="{fill}" stroke="#000000"/>')
        if opts.show_residues:
            out.append(
                f'<text x="{x + k // 2}" y="{y + k // 2}" font-size="{k // 2}" '
                f'text-anchor="middle" dominant-baseline="central">{shape.residue((r, c))}</text>'
            )
    base = (r1 - r0 + 1) * k + 2
    for i, line in enumerate(legend):
        y = base + (i + 1) * (k // 2 + 4)
        out.append(f'<text x="1" y="{y}" font-size="{k // 2}">{line}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_shape(s: SkewShape, opts: RenderOptions = RenderOptions()) -> str:
    if opts.format == "svg":
        return _svg(s, None, opts)
    return _ascii(s, None, opts)


def render_tiling(g: GammaTiling, opts: RenderOptions = RenderOptions()) -> str:
    """Draw the tiles (in tableau order) over the host shape with a content legend."""
    host, tiles = g.host, g.tiles
    owner = {u: i for i, t in enumerate(tiles) for u in t.nodes}
    ascii_only = opts.format == "ascii"
    legend = [f"{_LABELS[i % len(_LABELS)]}: {format_root(content(t), ascii_only)}" for i, t in enumerate(tiles)]
    if opts.format == "svg":
        return _svg(host, owner, opts, legend)
    return _ascii(host, owner, opts) + "\n".join(legend) + "\n"
