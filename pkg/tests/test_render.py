import re

import pytest

from artifact.cuspidal import canonical_ribbon, gamma_tiling
from artifact.render import RenderOptions, render_shape, render_tiling
from artifact.roots import RootVector
from artifact.shapes import SkewShape, from_skew_partition

E2_GOLDEN_ASCII = """\
.. .. .. .. .. B1
.. C0 C1 D0 D1 G0
.. C1 E0 E1 G0 G1
A1 F0 F1 I0 .. ..
H0 .. .. .. .. ..
A: a1
B: a1
C: d+a1
D: d
E: d
F: d
G: d+a0
H: a0
I: a0
"""


def test_single_node():
    assert render_shape(SkewShape([(0, 2)], 3)) == "2\n"


def test_horizontal_imaginary_ribbon(bx):
    z = canonical_ribbon(RootVector.delta(3), bx, 1).shape
    assert render_shape(z) == "1 2 0\n"


def test_rows_run_north_to_south():
    s = SkewShape([(0, 1), (1, 0), (1, 1)], 2)
    assert render_shape(s) == ". 1\n1 0\n"


def test_single_tile_tiling(bx):
    g = gamma_tiling(SkewShape([(0, 2)], 3), bx)
    assert render_tiling(g) == "A2\nA: a2\n"


def _e2_golden(e2):
    return gamma_tiling(from_skew_partition([6, 6, 6, 4, 1], [5, 1, 1], 0, 2), e2)


def test_e2_tiling_golden(e2):
    out = render_tiling(_e2_golden(e2))
    assert out == E2_GOLDEN_ASCII
    assert all(32 <= ord(ch) < 127 or ch == "\n" for ch in out)
    assert len(set(re.findall(r"[A-Z](?=\d)", out))) == 9


def test_every_node_drawn_once(e2):
    g = _e2_golden(e2)
    grid = render_tiling(g).split("\nA:")[0]
    cells = [c for c in grid.split() if c != ".."]
    assert len(cells) == len(g.host)


def test_color_wraps_cells(e2):
    out = render_tiling(_e2_golden(e2), RenderOptions(color=True))
    assert "\x1b[" in out


def test_svg_is_deterministic(e2):
    g = _e2_golden(e2)
    opts = RenderOptions(format="svg", cell_size=20)
    a, b = render_tiling(g, opts), render_tiling(g, opts)
    assert a == b
    assert a.startswith('<?xml') and a.rstrip().endswith("</svg>")
    assert a.count("<rect") == len(g.host)
    assert "δ+α1" in a
    assert len(set(re.findall(r'fill="(#[0-9a-f]{6})"', a))) == 9


def test_svg_shape_without_residues():
    out = render_shape(SkewShape([(0, 0), (0, 1)], 2), RenderOptions(format="svg", show_residues=False))
    assert out.count("<rect") == 2 and "<text" not in out


def test_bad_options():
    with pytest.raises(ValueError):
        RenderOptions(format="png")
    with pytest.raises(ValueError):
        RenderOptions(palette=())
