import random

import pytest
from hypothesis import given, settings, strategies as st

from artifact.preorder import (
    Cmp,
    Direction,
    InvalidPreorderError,
    NotARootError,
    Strictness,
    build_functional,
    decomposes,
    from_spec,
    require_valid,
    reverse,
    verify_axioms,
)
from artifact.roots import RootVector, alpha, positive_roots, psi_m

R = RootVector.of


def test_bigex_ranks_simple_roots(bx):
    a0, a1, a2 = (RootVector.simple(3, i) for i in range(3))
    assert bx.compare(a0, a1) is Cmp.GREATER
    assert bx.compare(a1, a2) is Cmp.GREATER
    assert bx.compare(RootVector.delta(3), RootVector.delta(3, 2)) is Cmp.EQUIVALENT


def test_e2_standard_puts_alpha1_on_top(e2):
    assert e2.succ(R((0, 1)), R((1, 1)))
    assert e2.succ(R((1, 1)), R((1, 0)))
    assert e2.succeq(R((2, 2)), R((1, 1)))


def test_compare_rejects_non_roots(e2):
    with pytest.raises(NotARootError):
        e2.compare(R((2, 0)), R((1, 0)))


@pytest.mark.parametrize("name", ["bx", "e2"])
def test_presets_pass_axioms(name, request):
    pre = request.getfixturevalue(name)
    assert verify_axioms(pre, 12).ok
    assert verify_axioms(reverse(pre), 12).ok


def test_degenerate_h_violates_imaginary_equivalency():
    pre = build_functional(2, [(1, 0), (1, 0)])
    report = verify_axioms(pre, 6)
    assert not report.ok
    assert {v.axiom for v in report.violations} == {"imaginary-equivalency"}
    assert report.violations[0].witnesses == (R((1, 0)), R((0, 1)))
    with pytest.raises(InvalidPreorderError):
        require_valid(pre, 6)


def test_from_spec_round_trip(bx, e2):
    assert from_spec({"preset": "bigex"}) == bx
    assert from_spec(reverse(e2).to_spec()) == reverse(e2)
    custom = build_functional(3, [(2, 1), (-1, 0), (-1, -1)])
    assert from_spec(custom.to_spec()) == custom
    with pytest.raises(InvalidPreorderError):
        from_spec({"preset": "nope"})
    with pytest.raises(InvalidPreorderError):
        from_spec({"preset": "bigex", "e": 2})


def test_decomposes_examples(e2, bx):
    theta, a1 = R((1, 2)), R((0, 1))
    # alpha0 + 2 alpha1 = delta + alpha1, and delta, alpha0 sit below alpha1
    assert decomposes(theta, a1, Direction.BELOW, Strictness.STRICT, e2)
    assert not decomposes(theta, a1, Direction.ABOVE, Strictness.STRICT, e2)
    d = RootVector.delta(2)
    assert not decomposes(RootVector.delta(2, 2), d, Direction.BELOW, Strictness.STRICT, e2)
    assert decomposes(RootVector.delta(2, 2), d, Direction.BELOW, Strictness.WEAK, e2)
    assert decomposes(R((3, 2, 2)), R((1, 0, 0)), Direction.BELOW, Strictness.WEAK, bx)


@given(st.integers(0, 2), st.integers(1, 10), st.integers(0, 2), st.integers(1, 10))
def test_reverse_flips_strict_comparisons(t1, h1, t2, h2):
    from artifact.preorder import bigex

    pre = bigex()
    a, b = alpha(3, t1, h1), alpha(3, t2, h2)
    assert reverse(pre).compare(a, b) is pre.compare(a, b).flip()


@pytest.mark.parametrize("name", ["bx", "e2"])
def test_generalized_convexity(name, request):
    pre = request.getfixturevalue(name)
    rng = random.Random(7)
    roots = positive_roots(pre.e, 8)
    for _ in range(300):
        parts = rng.sample(roots, rng.randint(2, 4))
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        dec = psi_m(total)
        if dec is None:
            continue
        gamma = dec.base
        key = sorted(parts, key=lambda r: sum(1 for s in parts if pre.succ(s, r)))
        top, bottom = key[0], key[-1]
        assert pre.compare(top, gamma) is not Cmp.LESS
        assert pre.compare(gamma, bottom) is not Cmp.LESS


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=3))
def test_axiom_checker_never_crashes(h):
    report = verify_axioms(build_functional(len(h), h), 5)
    assert report.height_bound == 5
