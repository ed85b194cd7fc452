"""Cuspidal ribbons, cuspidality tests and the cuspidal Kostant tiling.

For an indivisible root ``beta`` and a node ``b`` whose residue can start
``beta``, the ribbon ``zeta(beta, b)`` is the N/E path from ``b`` that steps
north while the running prefix content is above ``beta`` and east while it is
below.  Base nodes are fixed at ``(0, t)`` when a canonical ribbon is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .preorder import Cmp, ConvexPreorder, Direction, Strictness, decomposes
from .roots import (
    KostantPartition,
    RootVector,
    alpha,
    in_psi,
    is_real_root,
    kostant_from_sequence,
    positive_root_form,
    positive_roots,
    psi_m,
)
from .shapes import (
    InvalidShapeError,
    Node,
    SkewShape,
    content,
    e_similar,
    normalize,
    path_nodes,
    residue,
    validate,
)
from .tiling import (
    TieBreak,
    Tiling,
    enumerate_two_splits,
    minimal_removal_sequence,
    removable_ribbons,
)


class NotIndivisibleError(ValueError):
    pass


@dataclass(frozen=True)
class CuspidalRibbon:
    shape: SkewShape
    root: RootVector
    base: Node
    steps: str


@dataclass(frozen=True)
class GammaTiling:
    """A tiling with its tableau order and Kostant partition.

    ``tiling.tiles`` is already in tableau order: north-west first, contents
    weakly decreasing.
    """

    host: SkewShape
    tiling: Tiling
    partition: KostantPartition

    @property
    def tiles(self) -> tuple[SkewShape, ...]:
        return self.tiling.tiles

    def contents(self) -> list[RootVector]:
        return [content(t) for t in self.tiles]

    def to_json(self, pre: ConvexPreorder) -> dict:
        return {
            "tiles": [t.to_json() for t in self.tiles],
            "tableau": list(range(len(self.tiles))),
            "kostant": self.partition.to_json(pre),
        }


def _require_psi(beta: RootVector) -> None:
    if not in_psi(beta):
        raise NotIndivisibleError(f"{beta.coeffs} is neither a real root nor delta")


def init_residues(beta: RootVector) -> frozenset[int]:
    """Residues a cuspidal ribbon of content ``beta`` may start at."""
    _require_psi(beta)
    if not is_real_root(beta):
        return frozenset(range(beta.e))
    form = positive_root_form(beta)
    assert form is not None
    return frozenset({form.t})


def cuspidal_ribbon(beta: RootVector, b: tuple[int, int], pre: ConvexPreorder) -> CuspidalRibbon:
    """The ribbon ``zeta(beta, b)``."""
    _require_psi(beta)
    t = residue(b, beta.e)
    if t not in init_residues(beta):
        raise ValueError(f"residue {t} of {tuple(b)} cannot start a ribbon of content {beta}")
    steps = []
    for i in range(1, beta.height):
        prefix = alpha(beta.e, t, i)
        verdict = pre.compare(prefix, beta)
        if verdict is Cmp.EQUIVALENT:
            raise AssertionError(f"prefix {prefix} equivalent to {beta}; preorder is not convex")
        steps.append("N" if verdict is Cmp.GREATER else "E")
    path = "".join(steps)
    shape = SkewShape(path_nodes(b, path), beta.e)
    return CuspidalRibbon(shape, beta, Node(*b), path)


def canonical_ribbon(beta: RootVector, pre: ConvexPreorder, t: int | None = None) -> CuspidalRibbon:
    """``zeta(beta, (0, t))``; ``t`` defaults to the starting residue of a real root."""
    if t is None:
        t = min(init_residues(beta))
    return cuspidal_ribbon(beta, (0, t), pre)


# --------------------------------------------------------- cuspidality


def _split_ok(s: SkewShape, beta: RootVector, pre: ConvexPreorder, strictness: Strictness) -> bool:
    for lam1, lam2 in enumerate_two_splits(s):
        if not decomposes(content(lam1), beta, Direction.BELOW, strictness, pre):
            return False
        if not decomposes(content(lam2), beta, Direction.ABOVE, strictness, pre):
            return False
    return True


def is_cuspidal(s: SkewShape, pre: ConvexPreorder, *, brute_force: bool = False) -> bool:
    """Cuspidality; ribbons use the removable sub-ribbon test unless ``brute_force``."""
    if not s.nodes:
        return False
    beta = content(s)
    if positive_root_form(beta) is None or not validate(s.nodes).skew:
        return False
    if brute_force or not validate(s.nodes).ribbon:
        return _split_ok(s, beta, pre, Strictness.STRICT)
    for rem in removable_ribbons(s):
        if len(rem.ribbon) < len(s) and pre.compare(content(rem.ribbon), beta) is not Cmp.GREATER:
            return False
    return True


def is_semicuspidal(s: SkewShape, pre: ConvexPreorder, *, brute_force: bool = False) -> bool:
    """Semicuspidality, via the tile criterion on the cuspidal tiling or by brute force."""
    if not s.nodes or not validate(s.nodes).skew:
        return False
    dec = psi_m(content(s))
    if dec is None:
        return False
    if brute_force:
        return _split_ok(s, dec.base, pre, Strictness.WEAK)
    return all(content(t) == dec.base for t in gamma_tiling(s, pre).tiles)


# -------------------------------------------------------------- tilings


def gamma_tiling(host: SkewShape, pre: ConvexPreorder, policy: TieBreak = TieBreak.LEAST) -> GammaTiling:
    """The cuspidal Kostant tiling, built by stripping minimal SE-removable ribbons."""
    if not host.nodes:
        raise InvalidShapeError("empty shape")
    host.require_skew()
    if host.e != pre.e:
        raise ValueError(f"shape has e={host.e}, preorder has e={pre.e}")
    tiles = tuple(reversed(minimal_removal_sequence(host, pre, policy)))
    partition = kostant_from_sequence([content(t) for t in tiles], pre)
    return GammaTiling(host, Tiling(tiles), partition)


def gamma_sc_tiling(host: SkewShape, pre: ConvexPreorder) -> GammaTiling:
    """Merge equal-content tiles of the cuspidal tiling into one tile each."""
    g = gamma_tiling(host, pre)
    merged: dict[RootVector, set] = {}
    order: list[RootVector] = []
    for t in g.tiles:
        c = content(t)
        if c not in merged:
            merged[c] = set()
            order.append(c)
        merged[c] |= t.nodes
    tiles = tuple(SkewShape(merged[c], host.e) for c in order)
    return GammaTiling(host, Tiling(tiles), g.partition)


# ------------------------------------------------------- classification


def cuspidal_representatives(pre: ConvexPreorder, height_bound: int) -> list[CuspidalRibbon]:
    """One normalized cuspidal ribbon per real root up to ``height_bound``, plus one per residue for delta."""
    if height_bound < 1:
        raise ValueError("height_bound must be positive")
    e = pre.e
    out = []
    for beta in positive_roots(e, height_bound):
        if is_real_root(beta):
            out.append(_normalized(canonical_ribbon(beta, pre)))
    delta = RootVector.delta(e)
    for t in range(e):
        out.append(_normalized(canonical_ribbon(delta, pre, t)))
    return out


def _normalized(r: CuspidalRibbon) -> CuspidalRibbon:
    shape = normalize(r.shape)
    sw = Node(max(u.row for u in shape.nodes), min(u.col for u in shape.nodes))
    return CuspidalRibbon(shape, r.root, sw, r.steps)


def matches_representative(s: SkewShape, pre: ConvexPreorder) -> bool:
    """Is ``s`` e-similar to the canonical cuspidal ribbon of its content?"""
    if not s.nodes or not validate(s.nodes).skew:
        return False
    beta = content(s)
    if not in_psi(beta):
        return False
    starts = init_residues(beta)
    return any(e_similar(s, canonical_ribbon(beta, pre, t).shape) for t in starts)

