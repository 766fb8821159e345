"""Sturm sequences and exact real-root isolation by bisection."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elimination import squarefree_part
from .poly import ExactMathError, UPoly
from .rational import Rational, q, to_str

DEFAULT_TOLERANCE = Fraction(1, 2**40)


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval known to contain one real number.

    ``lo == hi`` means the value is the rational ``lo`` exactly.
    """

    lo: Rational
    hi: Rational

    @classmethod
    def point(cls, value) -> "Enclosure":
        value = q(value)
        return cls(value, value)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    @property
    def mid(self) -> Rational:
        return q(Fraction(self.lo + self.hi) / 2)

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def __float__(self) -> float:
        return float(Fraction(self.lo + self.hi) / 2)

    def to_json(self):
        if self.exact:
            return to_str(self.lo)
        return [to_str(self.lo), to_str(self.hi)]


def sturm_sequence(f: UPoly) -> list[UPoly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(seq: list[UPoly], x) -> int:
    count, last = 0, 0
    for p in seq:
        v = p(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def cauchy_bound(f: UPoly) -> Rational:
    lc = f.lc
    return q(1 + max(abs(Fraction(c) / lc) for c in f.coeffs[:-1])) if f.degree > 0 else 1


def isolate_real_roots(
    f: UPoly,
    interval: tuple | None = None,
    tolerance=DEFAULT_TOLERANCE,
) -> list[Enclosure]:
    """One enclosure of width <= tolerance per distinct real root in [lo, hi].

    Repeated roots are collapsed by dividing out gcd(f, f').  The whole real
    line (via the Cauchy bound) is searched when ``interval`` is None.
    """
    if f.is_zero():
        raise ExactMathError("cannot isolate roots of the zero polynomial")
    tolerance = q(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if f.degree == 0:
        return []
    g = squarefree_part(f)
    if interval is None:
        bound = cauchy_bound(g)
        lo, hi = -bound, bound
    else:
        lo, hi = q(interval[0]), q(interval[1])
    if lo > hi:
        raise ValueError("empty interval")
    seq = sturm_sequence(g)
    out: list[Enclosure] = []
    if g(lo) == 0:
        out.append(Enclosure.point(lo))
    if lo < hi:
        _isolate(g, seq, lo, hi, tolerance, out)
    return out


def _count(seq, lo, hi) -> int:
    """Distinct roots in the half-open interval (lo, hi]."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def _isolate(g, seq, lo, hi, tol, out) -> None:
    stack = [(lo, hi)]
    found = []
    while stack:
        lo, hi = stack.pop()
        n = _count(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            found.append(_narrow(g, seq, lo, hi, tol))
            continue
        mid = q(Fraction(lo + hi) / 2)
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.extend(sorted(found, key=lambda e: e.lo))


def _narrow(g, seq, lo, hi, tol) -> Enclosure:
    # exactly one root in (lo, hi]
    if g(hi) == 0:
        return Enclosure.point(hi)
    while hi - lo > tol:
        mid = q(Fraction(lo + hi) / 2)
        if g(mid) == 0:
            return Enclosure.point(mid)
        if _count(seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return Enclosure(lo, hi)


def refine(f: UPoly, enc: Enclosure, tolerance) -> Enclosure:
    """Shrink an isolating enclosure of a root of square-free ``f``."""
    if enc.exact or enc.width <= tolerance:
        return enc
    if f(enc.lo) == 0:
        return Enclosure.point(enc.lo)
    return _narrow(f, sturm_sequence(f), enc.lo, enc.hi, q(tolerance))
