"""Exact arithmetic on the positive part of the affine type A root lattice.

A root vector is stored as its coefficient tuple over the simple roots
``alpha_0, ..., alpha_{e-1}``.  The positive roots are the vectors
``alpha(t, h) = alpha_t + alpha_{t+1} + ... `` (``h`` consecutive residues
read cyclically); those with ``h`` divisible by ``e`` are the multiples of the
null root ``delta`` and are called imaginary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .preorder import ConvexPreorder

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class MixedRankError(ValueError):
    """Raised when values built for different ``e`` are combined."""


@dataclass(frozen=True, slots=True)
class RootVector:
    """An element of the positive cone of the root lattice."""

    e: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.e < 2:
            raise ValueError(f"e must be at least 2, got {self.e}")
        if len(self.coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"coefficients must be non-negative: {self.coeffs}")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> RootVector:
        cs = tuple(int(c) for c in coeffs)
        return cls(len(cs), cs)

    @classmethod
    def zero(cls, e: int) -> RootVector:
        return cls(e, (0,) * e)

    @classmethod
    def simple(cls, e: int, i: int) -> RootVector:
        cs = [0] * e
        cs[i % e] = 1
        return cls(e, tuple(cs))

    @classmethod
    def delta(cls, e: int, m: int = 1) -> RootVector:
        return cls(e, (m,) * e)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: RootVector) -> None:
        if self.e != other.e:
            raise MixedRankError(f"cannot combine e={self.e} with e={other.e}")

    def __add__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(self.e, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(self.e, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, m: int) -> RootVector:
        return RootVector(self.e, tuple(m * c for c in self.coeffs))

    __rmul__ = __mul__

    def dominated_by(self, other: RootVector) -> bool:
        """Coefficient-wise ``self <= other``."""
        self._check(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return format_root(self)


@dataclass(frozen=True, slots=True)
class PositiveRootForm:
    """The pair ``(t, h)`` naming ``alpha(t, h)``."""

    e: int
    t: int
    h: int

    def expand(self) -> RootVector:
        return alpha(self.e, self.t, self.h)

    @property
    def is_real(self) -> bool:
        return self.h % self.e != 0


class RootKind(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_A_ROOT = "not-a-root"


@dataclass(frozen=True, slots=True)
class Classification:
    kind: RootKind
    m: int = 0  # multiple of delta for imaginary roots


@dataclass(frozen=True, slots=True)
class PsiDecomposition:
    """``v = m * base`` with ``base`` a real root or ``delta``."""

    m: int
    base: RootVector


def alpha(e: int, t: int, h: int) -> RootVector:
    """``alpha_t + alpha_{t+1} + ...`` with ``h`` terms, indices mod ``e``."""
    if h < 1:
        raise ValueError(f"root height must be positive, got {h}")
    q, r = divmod(h, e)
    cs = [q] * e
    for j in range(r):
        cs[(t + j) % e] += 1
    return RootVector(e, tuple(cs))


def positive_root_form(v: RootVector) -> PositiveRootForm | None:
    """Return ``(t, h)`` with ``alpha(t, h) == v``, or ``None`` if ``v`` is not a positive root.

    For imaginary roots every ``t`` works and ``t = 0`` is returned.
    """
    h = v.height
    if h == 0:
        return None
    q, r = divmod(h, v.e)
    rest = [c - q for c in v.coeffs]
    if any(c not in (0, 1) for c in rest):
        return None
    if r == 0:
        return PositiveRootForm(v.e, 0, h)
    for t in range(v.e):
        if rest[t] == 1 and rest[(t - 1) % v.e] == 0:
            if all(rest[(t + j) % v.e] == 1 for j in range(r)):
                return PositiveRootForm(v.e, t, h)
            return None
    return None


def is_root(v: RootVector) -> bool:
    return positive_root_form(v) is not None


def is_real_root(v: RootVector) -> bool:
    return is_root(v) and v.height % v.e != 0


def is_imaginary_root(v: RootVector) -> bool:
    return v.height > 0 and len(set(v.coeffs)) == 1


def classify(v: RootVector) -> Classification:
    form = positive_root_form(v)
    if form is None:
        return Classification(RootKind.NOT_A_ROOT)
    if form.is_real:
        return Classification(RootKind.REAL)
    return Classification(RootKind.IMAGINARY, form.h // v.e)


def psi_m(v: RootVector) -> PsiDecomposition | None:
    """Split ``v`` as ``m * psi`` with ``psi`` indivisible, if ``v`` is a multiple of a root."""
    if v.is_zero():
        return None
    if is_imaginary_root(v):
        return PsiDecomposition(v.coeffs[0], RootVector.delta(v.e))
    for m in range(1, v.height + 1):
        if v.height % m or any(c % m for c in v.coeffs):
            continue
        base = RootVector(v.e, tuple(c // m for c in v.coeffs))
        if is_real_root(base):
            return PsiDecomposition(m, base)
    return None


def in_psi(v: RootVector) -> bool:
    return is_real_root(v) or v == RootVector.delta(v.e)


def positive_roots(e: int, max_height: int) -> list[RootVector]:
    """All positive roots of height at most ``max_height``, without repetition."""
    out: list[RootVector] = []
    for h in range(1, max_height + 1):
        if h % e == 0:
            out.append(RootVector.delta(e, h // e))
        else:
            out.extend(alpha(e, t, h) for t in range(e))
    return out


def indivisible_roots(e: int, max_height: int) -> list[RootVector]:
    return [v for v in positive_roots(e, max_height) if in_psi(v)]


def format_root(v: RootVector, ascii_only: bool = False) -> str:
    """Render a root vector in the usual ``2δ+α0+α1`` style (``2d+a0+a1`` in ASCII)."""
    text = _format_root(v)
    return text.replace("δ", "d").replace("α", "a") if ascii_only else text


def _format_root(v: RootVector) -> str:
    if v.is_zero():
        return "0"
    m = min(v.coeffs)
    rest = [c - m for c in v.coeffs]
    form = positive_root_form(RootVector(v.e, tuple(rest))) if any(rest) else None
    parts: list[str] = []
    if m:
        parts.append("δ" if m == 1 else f"{m}δ")
    if form is not None and form.is_real and form.h < v.e:
        parts.extend(f"α{(form.t + j) % v.e}" for j in range(form.h))
    else:
        for i, c in enumerate(rest):
            if c:
                parts.append(f"α{i}" if c == 1 else f"{c}α{i}")
    return "+".join(parts)


class KostantError(ValueError):
    """Invalid Kostant sequence; ``index`` points at the offending entry."""

    def __init__(self, message: str, index: int) -> None:
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class KostantPartition:
    """A multiset of indivisible roots.

    ``entries`` is kept sorted by coefficient tuple so that equality is
    structural; use :meth:`ordered` for the preorder-decreasing listing.
    """

    e: int
    entries: tuple[tuple[RootVector, int], ...]

    @classmethod
    def from_mapping(cls, e: int, counts: Mapping[RootVector, int]) -> KostantPartition:
        items = []
        for root, mult in counts.items():
            if root.e != e:
                raise MixedRankError(f"root {root} does not have e={e}")
            if not in_psi(root):
                raise ValueError(f"{root.coeffs} is not an indivisible root")
            if mult < 0:
                raise ValueError("multiplicities must be non-negative")
            if mult:
                items.append((root, int(mult)))
        items.sort(key=lambda rm: rm[0].coeffs)
        return cls(e, tuple(items))

    def as_dict(self) -> dict[RootVector, int]:
        return dict(self.entries)

    def __getitem__(self, root: RootVector) -> int:
        return self.as_dict().get(root, 0)

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def total(self) -> RootVector:
        acc = RootVector.zero(self.e)
        for root, m in self.entries:
            acc = acc + root * m
        return acc

    def ordered(self, pre: ConvexPreorder) -> list[tuple[RootVector, int]]:
        """Entries in strictly decreasing preorder order."""
        key = cmp_to_key(lambda a, b: -pre.compare(a[0], b[0]).sign)
        return sorted(self.entries, key=key)

    def notation(self, pre: ConvexPreorder, *, ascii_only: bool = False) -> str:
        parts = []
        for root, m in self.ordered(pre):
            name = format_root(root, ascii_only)
            if m > 1:
                name += f"^{m}" if ascii_only else str(m).translate(_SUPERSCRIPT)
            parts.append(name)
        return "(" + " | ".join(parts) + ")"

    def to_json(self, pre: ConvexPreorder) -> list[dict]:
        return [{"root": r.to_list(), "mult": m} for r, m in self.ordered(pre)]


def kostant_from_sequence(seq: Sequence[RootVector], pre: ConvexPreorder) -> KostantPartition:
    """Aggregate a Kostant sequence into its partition."""
    counts: dict[RootVector, int] = {}
    prev: RootVector | None = None
    for i, v in enumerate(seq):
        if v.e != pre.e:
            raise MixedRankError(f"entry {i} has e={v.e}, preorder has e={pre.e}")
        dec = psi_m(v)
        if dec is None:
            raise KostantError(f"entry {i} ({v.coeffs}) is not a multiple of a root", i)
        if prev is not None and pre.compare(prev, dec.base).sign < 0:
            raise KostantError(f"entry {i} breaks the weakly decreasing order", i)
        prev = dec.base
        counts[dec.base] = counts.get(dec.base, 0) + dec.m
    return KostantPartition.from_mapping(pre.e, counts)


class Bilex(enum.Enum):
    EQUAL = "equal"
    GREATER_BOTH = "greater"
    LESS_BOTH = "less"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True)
class BilexResult:
    verdict: Bilex
    right: int  # sign of the right-lex comparison
    left: int  # sign of the left-lex comparison


def _lex_sign(a: dict, b: dict, roots: Iterator[RootVector]) -> int:
    for root in roots:
        x, y = a.get(root, 0), b.get(root, 0)
        if x != y:
            return 1 if x > y else -1
    return 0


def bilex_compare(a: KostantPartition, b: KostantPartition, pre: ConvexPreorder) -> BilexResult:
    """Compare two Kostant partitions of the same content.

    Right-lex reads roots from the bottom of the preorder upwards, left-lex
    from the top downwards.
    """
    if a.e != b.e or a.e != pre.e:
        raise MixedRankError("partitions and preorder must share e")
    if a.total != b.total:
        raise ValueError(f"contents differ: {a.total.coeffs} vs {b.total.coeffs}")
    da, db = a.as_dict(), b.as_dict()
    support = sorted(set(da) | set(db), key=cmp_to_key(lambda x, y: pre.compare(x, y).sign))
    right = _lex_sign(da, db, iter(support))
    left = _lex_sign(da, db, reversed(support))
    if right == 0 and left == 0:
        verdict = Bilex.EQUAL
    elif right > 0 and left > 0:
        verdict = Bilex.GREATER_BOTH
    elif right < 0 and left < 0:
        verdict = Bilex.LESS_BOTH
    else:
        verdict = Bilex.INCOMPARABLE
    return BilexResult(verdict, right, left)
