import pytest
from hypothesis import given, strategies as st

from artifact.preorder import bigex, e2_standard
from artifact.roots import (
    Bilex,
    KostantError,
    MixedRankError,
    RootKind,
    RootVector,
    alpha,
    bilex_compare,
    classify,
    format_root,
    in_psi,
    indivisible_roots,
    is_imaginary_root,
    is_real_root,
    is_root,
    kostant_from_sequence,
    positive_root_form,
    positive_roots,
    psi_m,
)

R = RootVector.of


def test_alpha_wraps_cyclically():
    assert alpha(3, 2, 2) == R((1, 0, 1))
    assert alpha(3, 0, 7) == R((3, 2, 2))
    assert alpha(2, 1, 3) == R((1, 2))


def test_alpha_rejects_zero_height():
    with pytest.raises(ValueError):
        alpha(3, 0, 0)


@given(st.integers(2, 6), st.integers(0, 5), st.integers(1, 30))
def test_positive_root_form_inverts_alpha(e, t, h):
    v = alpha(e, t % e, h)
    form = positive_root_form(v)
    assert form is not None and form.expand() == v and form.h == h
    if h % e:
        assert form.t == t % e


def test_classify():
    assert classify(R((2, 1, 1))).kind is RootKind.REAL
    assert classify(R((2, 2, 2))).kind is RootKind.IMAGINARY
    assert classify(R((2, 2, 2))).m == 2
    assert classify(R((2, 0, 1))).kind is RootKind.NOT_A_ROOT
    assert classify(R((1, 0, 1))).kind is RootKind.REAL  # alpha2 + alpha0


def test_real_and_imaginary_predicates():
    assert is_real_root(R((1, 1, 0)))
    assert not is_real_root(R((1, 1, 1)))
    assert is_imaginary_root(R((3, 3)))
    assert not is_root(R((0, 2)))


def test_psi_m():
    d = psi_m(R((2, 4)))
    assert d.m == 2 and d.base == R((1, 2))
    assert psi_m(R((3, 3, 3))).base == RootVector.delta(3)
    assert psi_m(R((0, 2, 1))) is None
    assert in_psi(R((1, 1, 1))) and not in_psi(R((2, 2, 2)))


def test_root_enumeration_counts():
    roots = positive_roots(3, 6)
    # three real roots per height not divisible by 3, one imaginary otherwise
    assert len(roots) == 3 * 4 + 2
    assert len(set(roots)) == len(roots)
    assert RootVector.delta(3, 2) not in indivisible_roots(3, 6)


def test_format_root():
    assert format_root(R((3, 2, 2))) == "2δ+α0"
    assert format_root(R((1, 0, 1))) == "α2+α0"
    assert format_root(R((2, 2, 1))) == "δ+α0+α1"
    assert format_root(R((2, 0))) == "2α0"
    assert format_root(R((3, 2, 2)), ascii_only=True) == "2d+a0"


def test_mixed_rank_arithmetic_fails():
    with pytest.raises(MixedRankError):
        R((1, 0)) + R((1, 0, 0))


def test_kostant_from_sequence_requires_weak_decrease():
    e2 = e2_standard()
    a0, a1 = R((1, 0)), R((0, 1))
    k = kostant_from_sequence([a1, a1, R((1, 1)), a0], e2)
    assert k.notation(e2) == "(α1² | δ | α0)"
    assert k.notation(e2, ascii_only=True) == "(a1^2 | d | a0)"
    with pytest.raises(KostantError) as err:
        kostant_from_sequence([a0, a1], e2)
    assert err.value.index == 1


def test_kostant_sequence_rejects_non_roots():
    with pytest.raises(KostantError):
        kostant_from_sequence([R((3, 1))], e2_standard())


def test_bilex_examples():
    e2 = e2_standard()
    delta = kostant_from_sequence([R((1, 1))], e2)
    split = kostant_from_sequence([R((0, 1)), R((1, 0))], e2)
    assert bilex_compare(delta, split, e2).verdict is Bilex.LESS_BOTH
    assert bilex_compare(split, delta, e2).verdict is Bilex.GREATER_BOTH
    assert bilex_compare(split, split, e2).verdict is Bilex.EQUAL


def test_bilex_with_imaginary_multiplicities():
    bx = bigex()
    a = kostant_from_sequence([RootVector.delta(3), RootVector.delta(3)], bx)
    b = kostant_from_sequence([RootVector.delta(3, 2)], bx)
    assert a == b
    assert bilex_compare(a, b, bx).verdict is Bilex.EQUAL
