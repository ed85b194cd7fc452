"""Convex preorders on the positive roots.

Two kinds are supported: *functional* preorders, where every simple root is
sent to a vector in ``Q^2`` and roots are ranked by the slope
``h(beta) / ht(beta)`` in lexicographic order, and reversals of another
preorder.  Slopes are compared by integer cross-multiplication.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Mapping, Sequence

from .roots import (
    MixedRankError,
    RootVector,
    is_imaginary_root,
    positive_root_form,
    positive_roots,
    indivisible_roots,
)


class Cmp(enum.Enum):
    GREATER = 1
    EQUIVALENT = 0
    LESS = -1

    @property
    def sign(self) -> int:
        return self.value

    def flip(self) -> Cmp:
        return Cmp(-self.value)


class NotARootError(ValueError):
    pass


class InvalidPreorderError(ValueError):
    pass


class ConvexPreorder:
    """Base class; subclasses implement :meth:`_raw_compare` on coefficient tuples."""

    e: int

    def compare(self, beta: RootVector, gamma: RootVector) -> Cmp:
        if beta.e != self.e or gamma.e != self.e:
            raise MixedRankError(f"preorder has e={self.e}")
        for v in (beta, gamma):
            if positive_root_form(v) is None:
                raise NotARootError(f"{v.coeffs} is not a positive root")
        return Cmp(self.compare_coeffs(beta.coeffs, gamma.coeffs))

    def compare_coeffs(self, beta: tuple[int, ...], gamma: tuple[int, ...]) -> int:
        """Unchecked sign comparison on coefficient tuples (hot path)."""
        memo = self.__dict__.get("_memo")
        if memo is None:
            memo = {}
            object.__setattr__(self, "_memo", memo)
        key = (beta, gamma)
        got = memo.get(key)
        if got is None:
            got = memo[key] = self._raw_compare(beta, gamma)
        return got

    def _raw_compare(self, beta: tuple[int, ...], gamma: tuple[int, ...]) -> int:
        raise NotImplementedError

    def succ(self, beta: RootVector, gamma: RootVector) -> bool:
        return self.compare(beta, gamma) is Cmp.GREATER

    def succeq(self, beta: RootVector, gamma: RootVector) -> bool:
        return self.compare(beta, gamma) is not Cmp.LESS

    def to_spec(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class FunctionalPreorder(ConvexPreorder):
    e: int
    h: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if len(self.h) != self.e:
            raise ValueError(f"need {self.e} pairs, got {len(self.h)}")

    def _value(self, coeffs: tuple[int, ...]) -> tuple[int, int]:
        x = sum(c * p[0] for c, p in zip(coeffs, self.h))
        y = sum(c * p[1] for c, p in zip(coeffs, self.h))
        return x, y

    def _raw_compare(self, beta: tuple[int, ...], gamma: tuple[int, ...]) -> int:
        hb, hg = sum(beta), sum(gamma)
        vb, vg = self._value(beta), self._value(gamma)
        lhs = (hg * vb[0], hg * vb[1])
        rhs = (hb * vg[0], hb * vg[1])
        return (lhs > rhs) - (lhs < rhs)

    def to_spec(self) -> dict:
        if self.name:
            return {"e": self.e, "preset": self.name}
        return {"e": self.e, "h": [list(p) for p in self.h]}

    def __repr__(self) -> str:
        return f"FunctionalPreorder(e={self.e}, h={list(self.h)})"


@dataclass(frozen=True)
class ReversedPreorder(ConvexPreorder):
    inner: ConvexPreorder

    @property
    def e(self) -> int:  # type: ignore[override]
        return self.inner.e

    def _raw_compare(self, beta: tuple[int, ...], gamma: tuple[int, ...]) -> int:
        return self.inner.compare_coeffs(gamma, beta)

    def to_spec(self) -> dict:
        return {"reverse": self.inner.to_spec()}


def build_functional(e: int, h: Sequence[Sequence[int]], name: str | None = None) -> FunctionalPreorder:
    pairs = tuple((int(a), int(b)) for a, b in h)
    return FunctionalPreorder(e, pairs, name)


def reverse(pre: ConvexPreorder) -> ConvexPreorder:
    return ReversedPreorder(pre)


def bigex() -> FunctionalPreorder:
    return build_functional(3, [(2, 1), (-1, 0), (-1, -1)], name="bigex")


def e2_standard() -> FunctionalPreorder:
    return build_functional(2, [(-1, 0), (1, 0)], name="e2-standard")


PRESETS = {"bigex": bigex, "e2-standard": e2_standard}


def from_spec(spec: Mapping[str, Any]) -> ConvexPreorder:
    """Build a preorder from its JSON description."""
    if "reverse" in spec:
        return reverse(from_spec(spec["reverse"]))
    if "preset" in spec:
        name = spec["preset"]
        if name not in PRESETS:
            raise InvalidPreorderError(f"unknown preset {name!r}")
        pre = PRESETS[name]()
        if "e" in spec and int(spec["e"]) != pre.e:
            raise InvalidPreorderError(f"preset {name} has e={pre.e}")
        return pre
    if "h" in spec:
        h = spec["h"]
        e = int(spec.get("e", len(h)))
        if len(h) != e:
            raise InvalidPreorderError(f"h needs {e} pairs")
        return build_functional(e, h)
    raise InvalidPreorderError("preorder spec needs 'preset', 'h' or 'reverse'")


# ---------------------------------------------------------------- axioms


@dataclass(frozen=True)
class Violation:
    axiom: str
    witnesses: tuple[RootVector, ...]

    def __str__(self) -> str:
        return f"{self.axiom}: " + ", ".join(str(list(w.coeffs)) for w in self.witnesses)


@dataclass(frozen=True)
class AxiomReport:
    height_bound: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_axioms(pre: ConvexPreorder, height_bound: int = 12, *, limit: int | None = None) -> AxiomReport:
    """Check the convex preorder axioms on every positive root up to ``height_bound``.

    ``limit`` caps the number of recorded violations (``None`` keeps all).
    """
    if height_bound < 2:
        raise ValueError("height_bound must be at least 2")
    roots = positive_roots(pre.e, height_bound)
    cmp = {(a, b): pre.compare(a, b).sign for a in roots for b in roots}
    found: list[Violation] = []

    def report(axiom: str, *w: RootVector) -> bool:
        found.append(Violation(axiom, w))
        return limit is not None and len(found) >= limit

    for a in roots:
        if cmp[a, a] != 0 and report("reflexivity", a):
            return AxiomReport(height_bound, tuple(found))
    for a, b in itertools.combinations(roots, 2):
        if cmp[a, b] != -cmp[b, a] and report("totality", a, b):
            return AxiomReport(height_bound, tuple(found))
        both_imag = is_imaginary_root(a) and is_imaginary_root(b)
        if (cmp[a, b] == 0) != both_imag and report("imaginary-equivalency", a, b):
            return AxiomReport(height_bound, tuple(found))
    for a, b in itertools.permutations(roots, 2):
        if cmp[a, b] < 0:
            continue
        s = a + b
        if s.height <= height_bound and positive_root_form(s) is not None:
            if (cmp[a, s] < 0 or cmp[s, b] < 0) and report("convexity", a, b):
                return AxiomReport(height_bound, tuple(found))
    psi = indivisible_roots(pre.e, height_bound)
    for a, b, c in itertools.permutations(psi, 3):
        if cmp[a, b] >= 0 and cmp[b, c] >= 0 and cmp[a, c] < 0:
            if report("transitivity", a, b, c):
                break
    return AxiomReport(height_bound, tuple(found))


def require_valid(pre: ConvexPreorder, height_bound: int = 12) -> AxiomReport:
    report = verify_axioms(pre, height_bound, limit=1)
    if not report.ok:
        raise InvalidPreorderError(f"preorder fails {report.violations[0]}")
    return report


# ---------------------------------------------------------- decomposition


class Direction(enum.Enum):
    BELOW = "below"
    ABOVE = "above"


class Strictness(enum.Enum):
    STRICT = "strict"
    WEAK = "weak"


def decomposes(
    theta: RootVector,
    beta: RootVector,
    direction: Direction,
    strictness: Strictness,
    pre: ConvexPreorder,
) -> bool:
    """Is ``theta`` a sum of positive roots all below (or above) ``beta``?"""
    if theta.is_zero():
        raise ValueError("theta must be nonzero")
    if positive_root_form(beta) is None:
        raise NotARootError(f"{beta.coeffs} is not a positive root")
    return _decomposes(theta.coeffs, beta.coeffs, direction, strictness, pre)


@lru_cache(maxsize=1 << 16)
def _candidate_roots(pre: ConvexPreorder, beta: tuple[int, ...], direction: Direction,
                     strictness: Strictness, max_height: int) -> tuple[tuple[int, ...], ...]:
    want = 1 if direction is Direction.ABOVE else -1
    out = []
    for r in positive_roots(pre.e, max_height):
        s = pre.compare_coeffs(r.coeffs, beta)
        if s == want or (strictness is Strictness.WEAK and s == 0):
            out.append(r.coeffs)
    out.sort(key=sum, reverse=True)
    return tuple(out)


def _decomposes(theta: tuple[int, ...], beta: tuple[int, ...], direction: Direction,
                strictness: Strictness, pre: ConvexPreorder) -> bool:
    cands = _candidate_roots(pre, beta, direction, strictness, sum(theta))
    memo: dict[tuple[int, ...], bool] = {}

    def search(rest: tuple[int, ...]) -> bool:
        if not any(rest):
            return True
        if rest in memo:
            return memo[rest]
        ok = False
        for r in cands:
            if all(a <= b for a, b in zip(r, rest)):
                if search(tuple(b - a for a, b in zip(r, rest))):
                    ok = True
                    break
        memo[rest] = ok
        return ok

    return search(theta)
