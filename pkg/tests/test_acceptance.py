"""End-to-end acceptance checks; each test prints one PASS/FAIL line."""

import time

import pytest

from artifact.cuspidal import canonical_ribbon, gamma_tiling, is_semicuspidal
from artifact.dilation import dilate
from artifact.enumeration import connected_shapes_up_to, skew_shapes_in_window
from artifact.oracles import (
    check_classification,
    check_dilation_roundtrip,
    check_imaginary_recognition,
    check_maximality,
    check_reversal,
    check_tiebreak,
    imaginary_connected_shapes,
    maximality_population,
    random_connected_pairs,
    random_skew_shapes,
)
from artifact.preorder import bigex, e2_standard, reverse, verify_axioms
from artifact.roots import RootVector
from artifact.shapes import content, extremes, from_skew_partition, path_nodes, validate


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def test_criterion_01_bigex_goldens(report):
    pre = bigex()
    golden = {
        0: "(α0 | 2δ+α0 | 2δ+α0+α1 | δ² | δ+α1+α2 | α1+α2 | α2²)",
        1: "(α0+α1 | α2+α0 | δ+α0+α1 | δ+α2+α0 | 2δ+α0+α1 | δ² | α1+α2 | α2)",
        2: "(δ+α0 | 3δ+α0 | δ³ | δ+α2 | α1³ | α2)",
    }
    bad, slowest = [], 0.0
    for charge, expected in golden.items():
        start = time.perf_counter()
        got = gamma_tiling(from_skew_partition([6, 5, 5, 5, 5, 2, 2, 1], [], charge, 3), pre)
        slowest = max(slowest, time.perf_counter() - start)
        if got.partition.notation(pre) != expected:
            bad.append(charge)
    report(1, not bad and slowest < 1.0, f"charges failing {bad}, slowest {slowest:.3f}s")


def test_criterion_02_e2_golden(report):
    pre = e2_standard()
    g = gamma_tiling(from_skew_partition([6, 6, 6, 4, 1], [5, 1, 1], 0, 2), pre)
    got = g.partition.notation(pre)
    report(2, got == "(α1² | δ+α1 | δ³ | δ+α0 | α0²)", got)


# (preorder, root, starting residue, steps, residues along the path)
REFERENCE_RIBBONS = [
    ("bigex", (1, 0, 0), 0, "", [0]),
    ("bigex", (1, 1, 0), 0, "N", [0, 1]),
    ("bigex", (2, 1, 1), 0, "NNE", [0, 1, 2, 0]),
    ("bigex", (1, 0, 1), 2, "E", [2, 0]),
    ("bigex", (3, 2, 2), 0, "NNENEE", [0, 1, 2, 0, 1, 2, 0]),
    ("bigex", (2, 2, 1), 0, "NNEN", [0, 1, 2, 0, 1]),
    ("bigex", (2, 3, 3), 1, "EENNENN", [1, 2, 0, 1, 2, 0, 1, 2]),
    ("bigex", (1, 1, 2), 2, "ENN", [2, 0, 1, 2]),
    ("bigex", (1, 2, 2), 1, "EENN", [1, 2, 0, 1, 2]),
    ("bigex", (0, 1, 0), 1, "", [1]),
    ("bigex", (0, 1, 1), 1, "N", [1, 2]),
    ("bigex", (0, 0, 1), 2, "", [2]),
    ("bigex", (1, 1, 1), 0, "NN", [0, 1, 2]),
    ("bigex", (1, 1, 1), 1, "EE", [1, 2, 0]),
    ("bigex", (1, 1, 1), 2, "EN", [2, 0, 1]),
    ("e2", (1, 2), 1, "NE", [1, 0, 1]),
    ("e2", (3, 4), 1, "NENENE", [1, 0, 1, 0, 1, 0, 1]),
    ("e2", (2, 1), 0, "EN", [0, 1, 0]),
    ("e2", (4, 3), 0, "ENENEN", [0, 1, 0, 1, 0, 1, 0]),
    ("e2", (1, 1), 0, "E", [0, 1]),
    ("e2", (1, 1), 1, "N", [1, 0]),
]


def test_criterion_03_ribbon_layouts(report):
    pres = {"bigex": bigex(), "e2": e2_standard()}
    bad = []
    for name, coeffs, t, steps, residues in REFERENCE_RIBBONS:
        pre = pres[name]
        r = canonical_ribbon(RootVector.of(coeffs), pre, t)
        got = [r.shape.residue(u) for u in path_nodes(r.base, r.steps)]
        if r.steps != steps or got != residues:
            bad.append((name, coeffs, t, r.steps))
    report(3, not bad, f"{len(REFERENCE_RIBBONS)} ribbons, mismatches {bad}")


def _all_preorders():
    out = []
    for pre in (e2_standard(), bigex()):
        out += [pre, reverse(pre)]
    return out


def test_criterion_04_tiebreak_uniqueness(report):
    start = time.perf_counter()
    checked, bad = 0, []
    for pre in _all_preorders():
        shapes = skew_shapes_in_window(5, 5, 12, pre.e)
        checked += len(shapes)
        bad += check_tiebreak(shapes, pre)
    elapsed = time.perf_counter() - start
    report(4, not bad and elapsed <= 120, f"{checked} shapes, {len(bad)} failures, {elapsed:.1f}s")


def test_criterion_05_bilex_maximality(report):
    checked, bad = 0, []
    for pre, n in ((e2_standard(), 7), (bigex(), 8)):
        pop = maximality_population(n, pre.e)
        checked += len(pop)
        bad += check_maximality(pop, pre, node_cap=n)
    report(5, not bad, f"{checked} shapes, {len(bad)} violations")


def test_criterion_06_classification(report):
    checked, bad = 0, []
    for pre, n in ((e2_standard(), 6), (bigex(), 9)):
        pop = connected_shapes_up_to(n, pre.e)
        checked += len(pop)
        bad += check_classification(pop, pre)
    report(6, not bad, f"{checked} connected shapes, {len(bad)} disagreements")


def test_criterion_07_dilation(report):
    bad_round, bad_rec, recognised = [], [], 0
    for pre, seed in ((e2_standard(), 1), (bigex(), 2)):
        bad_round += check_dilation_roundtrip(random_connected_pairs(250, 8, pre.e, seed), pre)
    for pre, m in ((e2_standard(), 2), (e2_standard(), 3), (bigex(), 2)):
        shapes = imaginary_connected_shapes(m, pre.e)
        recognised += len(shapes)
        bad_rec += check_imaginary_recognition(shapes, pre)
    report(7, not bad_round and not bad_rec,
           f"500 round-trips ({len(bad_round)} failures), {recognised} imaginary shapes ({len(bad_rec)} failures)")


def test_criterion_08_reversal(report):
    bad = []
    for pre, seed in ((e2_standard(), 5), (bigex(), 6)):
        bad += check_reversal(random_skew_shapes(100, 10, pre.e, seed), pre)
    report(8, not bad, f"200 shapes, {len(bad)} failures")


def test_criterion_09_axioms(report):
    start = time.perf_counter()
    ok = verify_axioms(bigex(), 12).ok and verify_axioms(e2_standard(), 12).ok
    elapsed = time.perf_counter() - start
    report(9, ok and elapsed < 10, f"both presets at height 12 in {elapsed:.2f}s")


def test_criterion_10_young_dilation(report):
    pre = bigex()
    d = dilate(2, from_skew_partition([4, 3, 2], [], 0, 3), pre)
    zeta = canonical_ribbon(RootVector.delta(3), pre, 2).shape
    tiles = gamma_tiling(d, pre).tiles
    copies = all(t.translate((-extremes(t)[0].row, 2 - extremes(t)[0].col)).nodes == zeta.nodes for t in tiles)
    ok = (len(d) == 27 and validate(d.nodes).connected and content(d) == RootVector.delta(3, 9)
          and is_semicuspidal(d, pre) and len(tiles) == 9 and copies)
    report(10, ok, f"{len(d)} nodes, {len(tiles)} tiles, all translates of the colour-2 ribbon: {copies}")
