"""Recovering a curve label (X, V) from a Y-extremal point of the curve.

At a Y-extremal point (Y0, U0) of a smooth branch, differentiating the branch
relation b(t√B - s√A) = R in U gives t√B = 4b·w / (d(1 + a)) with
w = V - U0 + 4 and d the radicand divisor (16 for the H built in
``curve``).  Squaring yields a quadratic in V; for each root, the branch
relation at (Y0, U0) squares into a quadratic in X with positive leading
coefficient.  When a = -1 the derivative condition forces w = 0, so
V = U0 - 4 and t√B = √V.

Roots live in Q(√D) or in a square-root extension of it; they are returned
as exact rationals when possible and otherwise as certified rational
enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactmath import (
    DEFAULT_TOLERANCE,
    BPoly,
    Enclosure,
    UPoly,
    gcd_bivariate,
    isolate_real_roots,
    q,
    rational_sqrt,
    resultant_in_second_var,
    sqrt_bounds,
)
from ..frame import AnchorFrame
from .curve import CurvePoly
from .witness import sign_sqrt1


@dataclass(frozen=True)
class QuadNumber:
    """p + r·√D with rational p, r and a non-square D > 0 (or r = 0)."""

    p: object
    r: object = 0
    D: object = 1

    @classmethod
    def make(cls, p, r=0, D=1) -> "QuadNumber":
        p, r, D = q(p), q(r), q(D)
        if r == 0 or D == 0:
            return cls(p, 0, 1)
        root = rational_sqrt(D)
        if root is not None:
            return cls(q(p + r * root), 0, 1)
        return cls(p, r, D)

    @property
    def rational(self) -> bool:
        return self.r == 0

    def _field(self, other: "QuadNumber"):
        if self.r and other.r and self.D != other.D:
            raise ValueError("values from different quadratic fields")
        return self.D if self.r else other.D

    def __add__(self, other):
        other = _lift(other)
        return QuadNumber.make(self.p + other.p, self.r + other.r, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.p, -self.r, self.D)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        D = self._field(other)
        return QuadNumber.make(
            self.p * other.p + self.r * other.r * D,
            self.p * other.r + self.r * other.p,
            D,
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        return sign_sqrt1(self.r, self.D, self.p)

    def bounds(self, bits: int):
        if self.r == 0:
            return self.p, self.p
        lo, hi = sqrt_bounds(self.D, bits)
        a, b = self.p + self.r * lo, self.p + self.r * hi
        return min(a, b), max(a, b)


def _lift(x) -> QuadNumber:
    return x if isinstance(x, QuadNumber) else QuadNumber.make(x)


def _enclose(center: QuadNumber, radicand: QuadNumber | None, scale, tol) -> Enclosure:
    """Enclosure of center + scale·√radicand (radicand >= 0)."""
    if radicand is None or (radicand.rational and radicand.p == 0):
        if center.rational:
            return Enclosure.point(center.p)
        radicand, scale = None, 0
    if radicand is not None and radicand.rational and center.rational:
        root = rational_sqrt(radicand.p)
        if root is not None:
            return Enclosure.point(center.p + scale * root)
    bits = 64
    while True:
        c_lo, c_hi = center.bounds(bits)
        lo, hi = c_lo, c_hi
        if radicand is not None:
            r_lo, r_hi = radicand.bounds(bits)
            s_lo = sqrt_bounds(max(r_lo, 0), bits)[0]
            s_hi = sqrt_bounds(max(r_hi, 0), bits)[1]
            t = sorted((scale * s_lo, scale * s_hi))
            lo, hi = c_lo + t[0], c_hi + t[1]
        if hi - lo <= tol:
            return Enclosure(q(lo), q(hi))
        bits *= 2


@dataclass(frozen=True)
class RecoveryCandidate:
    X: Enclosure
    V: Enclosure

    def to_json(self) -> dict:
        return {"X": self.X.to_json(), "V": self.V.to_json()}

    def matches(self, X, V, slack) -> bool:
        return (
            self.X.lo - slack <= X <= self.X.hi + slack
            and self.V.lo - slack <= V <= self.V.hi + slack
        )


def v_quadratic(frame: AnchorFrame, U0, radicand_divisor: int = 16) -> UPoly:
    """Canonical quadratic in V from the U-derivative condition (a != -1).

    V - w²/d = (16/d²)·(b/(1+a))²·w² with w = V - U0 + 4.  With d = 4 this
    is V - w²/4 = (b/(1+a))²·w².
    """
    a, b = frame.a, frame.b
    if a == -1:
        raise ValueError("the V-quadratic degenerates when a = -1")
    d = Fraction(radicand_divisor)
    k2 = Fraction(b, 1 + a) ** 2
    w = UPoly([4 - q(U0), 1])
    poly = UPoly.x() - (w * w) * q(1 / d + 16 * k2 / (d * d))
    return poly.canonical()


def _v_candidates(frame, U0, d):
    """Pairs (V, t√B) as QuadNumbers."""
    a, b = frame.a, frame.b
    if a == -1:
        V = q(U0 - 4)
        if V < 0:
            return []
        return [(QuadNumber.make(V), QuadNumber.make(0, 1, V))]
    c2, c1, c0 = (v_quadratic(frame, U0, d)[k] for k in (2, 1, 0))
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    signs = (1,) if disc == 0 else (1, -1)
    out = []
    factor = Fraction(4 * b, d * (1 + a))
    for s in signs:
        V = QuadNumber.make(Fraction(-c1, 2 * c2), Fraction(s, 2 * c2), disc)
        out.append((V, (V + (4 - q(U0))) * q(factor)))
    return out


def recover_from_extremal(
    frame: AnchorFrame,
    Y0,
    U0,
    *,
    radicand_divisor: int = 16,
    tolerance=DEFAULT_TOLERANCE,
) -> list[RecoveryCandidate]:
    """Candidate labels (X, V), at most four, for a Y-extremal point (Y0, U0).

    Enclosure inputs are replaced by their midpoints.  Only the two
    quadratics are solved; whether (Y0, U0) really is Y-extremal on some
    component is the caller's business.
    """
    if isinstance(Y0, Enclosure):
        Y0 = Y0.mid
    if isinstance(U0, Enclosure):
        U0 = U0.mid
    Y0, U0 = q(Y0), q(U0)
    a, b = frame.a, frame.b
    if b == 0:
        raise ValueError("recovery needs a noncollinear frame")
    d = Fraction(radicand_divisor)
    tol = q(tolerance)
    l1 = Fraction(1 + a, 4 * b)
    alpha = q(l1 * l1 + 1 / d)
    e = Y0 - 4
    out: list[RecoveryCandidate] = []
    for V, sB in _v_candidates(frame, U0, d):
        # R at X = 0 for this (Y0, U0, V): V/2 - (1-a)Y0/4 - (1+a)(V - U0)/4
        R0 = V * q(Fraction(1, 2) - Fraction(1 + a, 4)) + q(
            Fraction(1 + a, 4) * U0 - Fraction(1 - a, 4) * Y0
        )
        l0 = sB - R0 * q(Fraction(1, b))
        beta = l0 * q(2 * l1) - q(1 + 2 * e / d)
        gamma = l0 * l0 + q(e * e / d)
        delta = beta * beta - gamma * q(4 * alpha)
        if delta.sign() < 0:
            continue
        center = beta * q(Fraction(-1, 2 * alpha))
        V_enc = _enclose(V, None, 0, tol)
        if delta.sign() == 0:
            out.append(RecoveryCandidate(_enclose(center, None, 0, tol), V_enc))
            continue
        for s in (1, -1):
            X_enc = _enclose(center, delta, q(Fraction(s, 2 * alpha)), tol)
            out.append(RecoveryCandidate(X_enc, V_enc))
    return out


# -- locating Y-extremal candidates ------------------------------------------

@dataclass(frozen=True)
class CriticalPoint:
    """A real solution of H = H_U = 0.

    ``kind`` is ``"ghost"`` when a radicand is negative, ``"boundary"`` when
    a radicand vanishes (the real curve ends there), ``"singular"`` when H_Y
    vanishes too, and ``"smooth"`` otherwise.  Only smooth points are
    extremal in the sense the recovery quadratics assume.
    """

    Y: Enclosure
    U: Enclosure
    kind: str

    @property
    def on_branch(self) -> bool:
        return self.kind != "ghost"

    def to_json(self) -> dict:
        return {"Y": self.Y.to_json(), "U": self.U.to_json(), "kind": self.kind}


def _reduced(H: BPoly) -> BPoly:
    g = gcd_bivariate(H, H.diff(1))
    if g.total_degree > 0:
        return H.exact_div(g).canonical()
    return H


def _straddles(enc) -> bool:
    return enc[0] <= 0 <= enc[1]


def critical_points(curve: CurvePoly, tolerance=DEFAULT_TOLERANCE) -> list[CriticalPoint]:
    """Real solutions of H = H_U = 0, isolated through resultants and Sturm.

    Y-coordinates are the real roots of Res_U(H, H_U), U-coordinates those of
    Res_Y(H, H_U); pairs are kept when both polynomials admit a zero on the
    box.  Repeated factors with positive U-degree are divided out first.
    Classification uses rational interval enclosures on the isolating box.
    """
    H = _reduced(curve.canonical)
    HU = H.diff(1)
    HY = H.diff(0)
    if HU.is_zero():
        return []
    ry = resultant_in_second_var(H, HU)
    ru = resultant_in_second_var(H.swap(), HU.swap())
    if ry.is_zero() or ru.is_zero():
        return []
    ys = isolate_real_roots(ry, None, tolerance)
    us = isolate_real_roots(ru, None, tolerance)
    out = []
    for yb in ys:
        for ub in us:
            box = ((yb.lo, yb.hi), (ub.lo, ub.hi))
            if not (_straddles(H.interval_eval(*box)) and _straddles(HU.interval_eval(*box))):
                continue
            a_enc = curve.A.interval_eval(*box)
            b_enc = curve.B.interval_eval(*box)
            if a_enc[1] < 0 or b_enc[1] < 0:
                kind = "ghost"
            elif _straddles(a_enc) or _straddles(b_enc):
                kind = "boundary"
            elif _straddles(HY.interval_eval(*box)):
                kind = "singular"
            else:
                kind = "smooth"
            out.append(CriticalPoint(yb, ub, kind))
    return out


RECOVERY_SLACK = Fraction(1, 2**16)
KINDS = ("smooth", "boundary", "singular", "ghost")


def recovery_report(curve: CurvePoly, tolerance=DEFAULT_TOLERANCE) -> dict:
    """Run the recovery at every critical point and count label hits per kind."""
    points = critical_points(curve, tolerance)
    rows = []
    for cp in points:
        cands = recover_from_extremal(curve.frame, cp.Y, cp.U, tolerance=tolerance)
        hit = any(c.matches(curve.X, curve.V, RECOVERY_SLACK) for c in cands)
        rows.append({**cp.to_json(), "candidates": len(cands), "recovered": hit})
    counts = {k: sum(r["kind"] == k for r in rows) for k in KINDS}
    hits = {k: sum(r["kind"] == k and r["recovered"] for r in rows) for k in KINDS}
    return {
        "critical_points": len(rows),
        "kinds": counts,
        "recovered": hits,
        "max_candidates": max((r["candidates"] for r in rows), default=0),
        "points": rows,
    }
