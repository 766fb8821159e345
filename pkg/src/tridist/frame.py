"""Anchor normalization and squared distances.

All curve algebra works in the frame p1 = (1, 0), p2 = (-1, 0), p3 = (a, b).
Arbitrary anchors are moved there by the complex-affine similarity
``T(z) = (2z - p1 - p2) / (p1 - p2)``, which keeps rational input rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .exactmath.rational import Rational, parse, q, to_str


class FrameError(ValueError):
    """Invalid anchors or point set."""


class PlanePoint(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "PlanePoint":
        return cls(q(x), q(y))

    def to_json(self) -> list[str]:
        return [to_str(self.x), to_str(self.y)]


class DistanceTriple(NamedTuple):
    X: Rational
    Y: Rational
    Z: Rational


@dataclass(frozen=True)
class AnchorFrame:
    a: Rational
    b: Rational

    def __post_init__(self):
        object.__setattr__(self, "a", q(self.a))
        object.__setattr__(self, "b", q(self.b))

    @property
    def collinear(self) -> bool:
        return self.b == 0

    @property
    def covertical_p1(self) -> bool:
        return self.a == 1

    @property
    def covertical_p2(self) -> bool:
        return self.a == -1

    @property
    def anchors(self) -> tuple[PlanePoint, PlanePoint, PlanePoint]:
        return PlanePoint(1, 0), PlanePoint(-1, 0), PlanePoint(self.a, self.b)

    def flags(self) -> dict:
        return {
            "collinear": self.collinear,
            "covertical_p1": self.covertical_p1,
            "covertical_p2": self.covertical_p2,
        }

    def to_json(self) -> list[str]:
        return [to_str(self.a), to_str(self.b)]


@dataclass(frozen=True)
class Configuration:
    frame: AnchorFrame
    points: tuple[PlanePoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        pts = tuple(PlanePoint.of(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        anchors = set(self.frame.anchors)
        seen = set()
        for p in pts:
            if p in anchors:
                raise FrameError(f"point {p.to_json()} coincides with an anchor")
            if p in seen:
                raise FrameError(f"duplicate point {p.to_json()}")
            seen.add(p)

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"p3": self.frame.to_json(), "points": [p.to_json() for p in self.points]}


def distance_triple(frame: AnchorFrame, pt) -> DistanceTriple:
    """Squared distances of ``pt`` to p1, p2 and p3."""
    x, y = q(pt[0]), q(pt[1])
    if (x, y) in frame.anchors:
        raise FrameError(f"point ({to_str(x)}, {to_str(y)}) coincides with an anchor")
    return DistanceTriple(
        q((x - 1) ** 2 + y**2),
        q((x + 1) ** 2 + y**2),
        q((x - frame.a) ** 2 + (y - frame.b) ** 2),
    )


def _cdiv(z, w):
    (zr, zi), (wr, wi) = z, w
    den = Fraction(wr * wr + wi * wi)
    return ((zr * wr + zi * wi) / den, (zi * wr - zr * wi) / den)


def normalize(p1, p2, p3, points: Iterable) -> tuple[Configuration, Rational]:
    """Move anchors to the standard frame.

    Returns the normalized configuration and the factor ``4 / |p1 p2|**2``
    by which every squared distance is multiplied.  When the similarity
    lands p3 below the axis, the result is reflected across it as well so
    that b >= 0; distances are unaffected.
    """
    p1, p2, p3 = (PlanePoint.of(*p) for p in (p1, p2, p3))
    if p1 == p2:
        raise FrameError("p1 and p2 coincide")
    pts = [PlanePoint.of(*p) for p in points]
    anchors = {p1, p2, p3}
    for p in pts:
        if p in anchors:
            raise FrameError(f"point {p.to_json()} coincides with an anchor")
    if len(set(pts)) != len(pts):
        raise FrameError("duplicate points")
    den = (p1.x - p2.x, p1.y - p2.y)
    sx, sy = p1.x + p2.x, p1.y + p2.y

    def t(p: PlanePoint) -> PlanePoint:
        re, im = _cdiv((2 * p.x - sx, 2 * p.y - sy), den)
        return PlanePoint.of(re, im)

    t3 = t(p3)
    if t3.y < 0:
        # reflect across the p1p2 axis so p3 sits in the upper half-plane
        inner = t
        t = lambda p: PlanePoint(inner(p).x, -inner(p).y)  # noqa: E731
        t3 = t(p3)
    scale = q(Fraction(4) / (den[0] ** 2 + den[1] ** 2))
    return Configuration(AnchorFrame(t3.x, t3.y), tuple(t(p) for p in pts)), scale


def load_configuration(data: dict) -> tuple[Configuration, Rational]:
    """Parse the configuration JSON; ``p1``/``p2`` keys trigger normalization."""
    if "p3" not in data:
        raise ValueError("configuration needs a 'p3' entry")
    p3 = [parse(c) for c in data["p3"]]
    pts = [[parse(c) for c in p] for p in data.get("points", [])]
    if "p1" in data or "p2" in data:
        p1 = [parse(c) for c in data.get("p1", ["1", "0"])]
        p2 = [parse(c) for c in data.get("p2", ["-1", "0"])]
        return normalize(p1, p2, p3, pts)
    return Configuration(AnchorFrame(*p3), tuple(pts)), 1
