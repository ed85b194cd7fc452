"""Exhaustive cross-checks of the tiling and classification results.

Each ``check_*`` function returns the list of counterexamples it found, so an
empty list means the property held on the whole population.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cuspidal import gamma_tiling, is_cuspidal, is_semicuspidal, matches_representative
from .dilation import dilate, undilate
from .enumeration import connected_shapes_up_to, skew_shapes_in_window
from .preorder import ConvexPreorder, reverse, verify_axioms
from .roots import Bilex, RootVector, bilex_compare
from .shapes import SkewShape, content, reverse as reverse_shape, validate
from .tiling import TieBreak, enumerate_kostant_tilings, union_condition


def check_tiebreak(shapes: Iterable[SkewShape], pre: ConvexPreorder) -> list[SkewShape]:
    """Shapes whose cuspidal tiling depends on the tie-break policy."""
    bad = []
    for s in shapes:
        a = gamma_tiling(s, pre, TieBreak.LEAST).tiling.tile_set
        b = gamma_tiling(s, pre, TieBreak.GREATEST).tiling.tile_set
        if a != b:
            bad.append(s)
    return bad


@dataclass
class MaximalityFailure:
    shape: SkewShape
    tiling: tuple
    reason: str


def check_maximality(shapes: Iterable[SkewShape], pre: ConvexPreorder,
                     node_cap: int = 10) -> list[MaximalityFailure]:
    """Every Kostant tiling is bilex-dominated by the cuspidal one, with equality exactly under the union condition."""
    bad = []
    for s in shapes:
        g = gamma_tiling(s, pre)
        seen_gamma = False
        for tiling, kappa in enumerate_kostant_tilings(s, pre, node_cap):
            verdict = bilex_compare(g.partition, kappa, pre).verdict
            union = union_condition(tiling.tiles, g.tiles)
            if tiling.tile_set == g.tiling.tile_set:
                seen_gamma = True
            if verdict not in (Bilex.EQUAL, Bilex.GREATER_BOTH):
                bad.append(MaximalityFailure(s, tiling.tiles, f"verdict {verdict.value}"))
            elif (verdict is Bilex.EQUAL) != union:
                bad.append(MaximalityFailure(s, tiling.tiles, "equality disagrees with union condition"))
        if not seen_gamma:
            bad.append(MaximalityFailure(s, g.tiles, "cuspidal tiling missing from enumeration"))
    return bad


@dataclass
class ClassificationFailure:
    shape: SkewShape
    kind: str
    brute: bool
    theory: bool


def check_classification(shapes: Iterable[SkewShape], pre: ConvexPreorder) -> list[ClassificationFailure]:
    """Brute-force cuspidality and semicuspidality against their classifications."""
    bad = []
    for s in shapes:
        brute = is_cuspidal(s, pre, brute_force=True)
        theory = matches_representative(s, pre)
        if brute != theory:
            bad.append(ClassificationFailure(s, "cuspidal", brute, theory))
        brute = is_semicuspidal(s, pre, brute_force=True)
        theory = is_semicuspidal(s, pre)
        if brute != theory:
            bad.append(ClassificationFailure(s, "semicuspidal", brute, theory))
    return bad


def check_reversal(shapes: Iterable[SkewShape], pre: ConvexPreorder) -> list[SkewShape]:
    """Shapes where reversing shape and preorder does not reverse the cuspidal tiling."""
    rpre = reverse(pre)
    bad = []
    for s in shapes:
        forward = {reverse_shape(t).nodes for t in gamma_tiling(s, pre).tiles}
        backward = {t.nodes for t in gamma_tiling(reverse_shape(s), rpre).tiles}
        if forward != backward:
            bad.append(s)
    return bad


def check_dilation_roundtrip(pairs: Iterable[tuple[int, SkewShape]], pre: ConvexPreorder) -> list[tuple[int, SkewShape]]:
    bad = []
    for t, s in pairs:
        got = undilate(dilate(t, s, pre), pre)
        if got is None or got[0] != t % pre.e or got[1].nodes != s.nodes:
            bad.append((t, s))
    return bad


def check_imaginary_recognition(shapes: Iterable[SkewShape], pre: ConvexPreorder) -> list[SkewShape]:
    """Connected shapes of content m*delta: semicuspidal exactly when they undilate."""
    bad = []
    for s in shapes:
        if is_semicuspidal(s, pre) != (undilate(s, pre) is not None):
            bad.append(s)
    return bad


def imaginary_connected_shapes(m: int, e: int) -> list[SkewShape]:
    delta = RootVector.delta(e, m)
    return [s for s in connected_shapes_up_to(m * e, e) if content(s) == delta]


def random_skew_shapes(count: int, max_nodes: int, e: int, seed: int = 0,
                       window: int = 6) -> list[SkewShape]:
    rng = random.Random(seed)
    pool = skew_shapes_in_window(window, window, max_nodes, e)
    return rng.sample(pool, min(count, len(pool)))


def random_connected_pairs(count: int, max_nodes: int, e: int, seed: int = 0) -> list[tuple[int, SkewShape]]:
    rng = random.Random(seed)
    pool = connected_shapes_up_to(max_nodes, e)
    out = []
    for _ in range(count):
        s = rng.choice(pool)
        shift = (rng.randint(-5, 5), rng.randint(-5, 5))
        out.append((rng.randrange(e), s.translate(shift)))
    return out


def maximality_population(max_nodes: int, e: int) -> list[SkewShape]:
    """Connected shapes up to e-similarity plus every skew shape in a 4x4 window."""
    seen = set()
    out = []
    for s in connected_shapes_up_to(max_nodes, e) + skew_shapes_in_window(4, 4, max_nodes, e):
        if s.nodes not in seen:
            seen.add(s.nodes)
            out.append(s)
    return out


# ------------------------------------------------------------ full suite


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_suite(pre: ConvexPreorder, max_nodes: int, height_bound: int = 12) -> list[SuiteResult]:
    """The oracle battery used by the command line ``verify`` command."""
    results = []
    report = verify_axioms(pre, height_bound)
    results.append(SuiteResult("preorder axioms", height_bound, list(report.violations)))

    window = skew_shapes_in_window(4, 4, max_nodes, pre.e)
    results.append(SuiteResult("tie-break uniqueness", len(window), check_tiebreak(window, pre)))

    pop = maximality_population(max_nodes, pre.e)
    results.append(SuiteResult("bilex maximality", len(pop), check_maximality(pop, pre, node_cap=max_nodes)))

    conn = connected_shapes_up_to(max_nodes, pre.e)
    results.append(SuiteResult("classification", len(conn), check_classification(conn, pre)))

    results.append(SuiteResult("reversal duality", len(window), check_reversal(window, pre)))
    return results


def connected_only(shapes: Sequence[SkewShape]) -> list[SkewShape]:
    return [s for s in shapes if validate(s.nodes).connected]
