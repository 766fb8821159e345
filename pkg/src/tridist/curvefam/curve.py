"""The degree-4 curves γ_{X,V} in the (Y, U) parameter plane.

For fixed squared distances X = |p1 q1|² and V = |p2 q2|², a point (Y, U)
lies on γ_{X,V} when some real pair q1 = (x, y), q2 = (u, v) has those four
anchor distances and |p3 q1| = |p3 q2|.  With x = (Y - X)/4, u = (V - U)/4:

    A(Y) = X - ((Y - X)/4 - 1)²      (= y²)
    B(U) = V - ((V - U)/4 + 1)²      (= v²)
    R(Y, U) = (V - X)/2 - (1 - a)(Y - X)/4 - (1 + a)(V - U)/4

and the equal-distance condition reads R = b(v - y).  Multiplying the four
sign conjugates of ``b(t√B - s√A) - R`` gives

    H = (b²A + b²B - R²)² - 4 b⁴ A B.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..exactmath import BPoly, Rational, q
from ..frame import AnchorFrame


class CurveError(ValueError):
    """Invalid curve parameters or mixed frames."""


_S = BPoly.var(0)
_T = BPoly.var(1)


def _radicand_first(X) -> BPoly:
    """X - ((s - X)/4 - 1)² with the running variable s in the first slot."""
    return X - ((_S - X) * Fraction(1, 4) - 1) ** 2


def _radicand_second(V) -> BPoly:
    """V - ((V - t)/4 + 1)² with the running variable t in the second slot."""
    return V - ((V - _T) * Fraction(1, 4) + 1) ** 2


def _linear_part(frame: AnchorFrame, X, V, Y, U) -> BPoly:
    a = frame.a
    return (
        (V - X) * Fraction(1, 2)
        - (Y - X) * Fraction(1 - a, 4)
        - (V - U) * Fraction(1 + a, 4)
    )


def _quartic(frame: AnchorFrame, A: BPoly, B: BPoly, R: BPoly) -> BPoly:
    b2 = frame.b**2
    inner = A * b2 + B * b2 - R * R
    return inner * inner - A * B * (4 * b2 * b2)


@dataclass(frozen=True)
class CurvePoly:
    X: Rational
    V: Rational
    frame: AnchorFrame
    A: BPoly
    B: BPoly
    R: BPoly
    H: BPoly
    canonical: BPoly = field(repr=False)

    @property
    def label(self) -> tuple[Rational, Rational]:
        return (self.X, self.V)

    def radicand_A(self, Y) -> Rational:
        return q(self.X - (Fraction(Y - self.X, 4) - 1) ** 2)

    def radicand_B(self, U) -> Rational:
        return q(self.V - (Fraction(self.V - U, 4) + 1) ** 2)

    def linear(self, Y, U) -> Rational:
        a = self.frame.a
        return q(
            Fraction(self.V - self.X, 2)
            - Fraction((1 - a) * (Y - self.X), 4)
            - Fraction((1 + a) * (self.V - U), 4)
        )


@lru_cache(maxsize=65536)
def build_curve(frame: AnchorFrame, X, V) -> CurvePoly:
    X, V = q(X), q(V)
    if X < 0 or V < 0:
        raise CurveError("squared distances must be nonnegative")
    A = _radicand_first(X)
    B = _radicand_second(V)
    R = _linear_part(frame, X, V, _S, _T)
    H = _quartic(frame, A, B, R)
    return CurvePoly(X, V, frame, A, B, R, H, H.canonical())


def membership(curve: CurvePoly, Y, U) -> bool:
    """(Y, U) on the real curve: H = 0 with both radicands nonnegative."""
    if curve.radicand_A(Y) < 0 or curve.radicand_B(U) < 0:
        return False
    return curve.canonical(q(Y), q(U)) == 0


def on_algebraic_curve(curve: CurvePoly, Y, U) -> bool:
    """H(Y, U) = 0, ignoring the radicand side conditions."""
    return curve.canonical(q(Y), q(U)) == 0


def is_ghost(curve: CurvePoly, Y, U) -> bool:
    """A zero of H with no real point configuration behind it."""
    return on_algebraic_curve(curve, Y, U) and not membership(curve, Y, U)


@dataclass(frozen=True)
class DualCurve:
    """γ*_{Y,U}: the same relation with (X, V) as the running point."""

    Y: Rational
    U: Rational
    frame: AnchorFrame
    A: BPoly
    B: BPoly
    H: BPoly


@lru_cache(maxsize=65536)
def build_dual_curve(frame: AnchorFrame, Y, U) -> DualCurve:
    Y, U = q(Y), q(U)
    # running variables: X in the first slot, V in the second
    X, V = _S, _T
    A = X - ((Y - X) * Fraction(1, 4) - 1) ** 2
    B = V - ((V - U) * Fraction(1, 4) + 1) ** 2
    R = _linear_part(frame, X, V, BPoly.const(Y), BPoly.const(U))
    return DualCurve(Y, U, frame, A, B, _quartic(frame, A, B, R).canonical())


def dual_membership(frame: AnchorFrame, Y, U, X, V) -> bool:
    dual = build_dual_curve(frame, Y, U)
    X, V = q(X), q(V)
    if dual.A(X, 0) < 0 or dual.B(0, V) < 0:
        return False
    return dual.H(X, V) == 0


def within_bounds(X, Y) -> bool:
    """Y <= (2 + √X)², decided exactly.

    With x = (Y - X)/4 the claim is x - 1 <= √X, which follows from
    y² = X - (x - 1)² >= 0.
    """
    w = Fraction(Y - X, 4) - 1
    return w <= 0 or w * w <= X
