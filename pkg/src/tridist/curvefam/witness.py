"""Point-pair witnesses behind an incidence, decided with exact square-root signs."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from ..census import Quadruple
from ..exactmath import Rational, q
from ..exactmath.rational import sign
from ..frame import AnchorFrame
from .curve import CurveError


def sign_sqrt1(p, A, c) -> int:
    """sign(p·√A + c) for rational p, c and A >= 0."""
    if p == 0 or A == 0:
        return sign(c)
    sp = sign(p)
    if c == 0 or sign(c) == sp:
        return sp
    d = p * p * A - c * c
    return sp if d > 0 else (sign(c) if d < 0 else 0)


def sign_sqrt2(p, A, r, B, c) -> int:
    """sign(p·√A + r·√B + c) for rational p, r, c and A, B >= 0."""
    sx = sign_sqrt1(p, A, c)
    sy = 0 if (r == 0 or B == 0) else sign(r)
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # opposite signs: compare squares, x² - y² = p²A + c² - r²B + 2pc√A
    d = sign_sqrt1(2 * p * c, A, p * p * A + c * c - r * r * B)
    return sx if d > 0 else (sy if d < 0 else 0)


class WitnessPair(NamedTuple):
    """q1 = (x, y), q2 = (u, v) with y = y_sign·√y_sq and v = v_sign·√v_sq."""

    x: Rational
    y_sq: Rational
    y_sign: int
    u: Rational
    v_sq: Rational
    v_sign: int

    def matches(self, q1, q2) -> bool:
        x, y = q(q1[0]), q(q1[1])
        u, v = q(q2[0]), q(q2[1])
        return (
            self.x == x
            and self.u == u
            and self.y_sq == y * y
            and self.v_sq == v * v
            and self.y_sign == sign(y)
            and self.v_sign == sign(v)
        )

    def to_json(self) -> dict:
        from ..exactmath import to_str

        return {
            "x": to_str(self.x),
            "y_sq": to_str(self.y_sq),
            "y_sign": self.y_sign,
            "u": to_str(self.u),
            "v_sq": to_str(self.v_sq),
            "v_sign": self.v_sign,
        }


def _witness_signs(frame: AnchorFrame, X, Y, U, V):
    x = q(Fraction(Y - X, 4))
    u = q(Fraction(V - U, 4))
    y_sq = q(X - (x - 1) ** 2)
    v_sq = q(V - (u + 1) ** 2)
    return x, u, y_sq, v_sq


def _third_equation_residual(frame: AnchorFrame, X, V, x, u) -> Rational:
    # (V - X)/2 - (1 - a)x - (1 + a)u, which must equal b(v - y)
    a = frame.a
    return q(Fraction(V - X, 2) - (1 - a) * x - (1 + a) * u)


def witness_candidates(frame: AnchorFrame, quad) -> list[WitnessPair]:
    """All real sign choices solving the pair system (empty if none)."""
    X, Y, U, V = (q(c) for c in quad)
    x, u, y_sq, v_sq = _witness_signs(frame, X, Y, U, V)
    if y_sq < 0 or v_sq < 0:
        return []
    rhs = _third_equation_residual(frame, X, V, x, u)
    b = frame.b
    out = []
    for s in ((1, -1) if y_sq else (0,)):
        for t in ((1, -1) if v_sq else (0,)):
            # b(t√v_sq - s√y_sq) - rhs == 0
            if sign_sqrt2(-s * b, y_sq, t * b, v_sq, -rhs) == 0:
                out.append(WitnessPair(x, y_sq, s, u, v_sq, t))
    return out


def reconstruct_witnesses(frame: AnchorFrame, quad) -> list[WitnessPair]:
    """Recover the point pairs (at most four) realizing an incidence.

    Raises CurveError when a radicand is negative or no sign choice works.
    """
    X, Y, U, V = (q(c) for c in quad)
    _, _, y_sq, v_sq = _witness_signs(frame, X, Y, U, V)
    if y_sq < 0 or v_sq < 0:
        raise CurveError("negative radicand: no real witness")
    out = witness_candidates(frame, quad)
    if not out:
        raise CurveError(f"({Y}, {U}) is not on the curve ({X}, {V})")
    return out


def witness_membership(frame: AnchorFrame, X, Y, U, V) -> bool:
    """Membership decided from the point-pair system directly, without H."""
    return bool(witness_candidates(frame, Quadruple(X, Y, U, V)))
