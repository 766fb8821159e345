"""Point-set generators for experiments.

Grid offsets: the m×m lattice uses x in [-⌊m/2⌋, -⌊m/2⌋ + m - 1] and
y in [1, m].  When b > 0 the rows are mirrored to y in [-m, -1], so no
lattice point can coincide with p1, p2 (on y = 0) or p3.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..frame import AnchorFrame, Configuration, PlanePoint

FAMILIES = ("grid", "random-rational", "collinear-diagnostic")


def grid(m: int, frame: AnchorFrame) -> Configuration:
    if m < 0:
        raise ValueError("grid size must be nonnegative")
    x0 = -(m // 2)
    sign = -1 if frame.b > 0 else 1
    pts = [(x0 + i, sign * (j + 1)) for j in range(m) for i in range(m)]
    return Configuration(frame, tuple(pts))


def collinear_diagnostic(m: int, a=0) -> Configuration:
    """Plain m×m grid in the collinear frame (a, 0)."""
    return grid(m, AnchorFrame(a, 0))


def _circle_point(rng: random.Random, center: PlanePoint, radius: Fraction) -> PlanePoint:
    # rational parametrization of the circle: ((1-t²)/(1+t²), 2t/(1+t²))
    t = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
    den = 1 + t * t
    return PlanePoint.of(center.x + radius * (1 - t * t) / den, center.y + radius * 2 * t / den)


def random_rational(n: int, frame: AnchorFrame, rng: random.Random) -> Configuration:
    """n rational points spread over about √n rational circles around p3.

    Sharing circles forces equal p3-distances, which makes the census
    nontrivial.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    center = frame.anchors[2]
    k = max(1, round(n ** 0.5))
    radii = [Fraction(rng.randint(1, 24), rng.randint(1, 4)) for _ in range(k)]
    blocked = set(frame.anchors)
    pts: list[PlanePoint] = []
    seen: set = set()
    tries = 0
    while len(pts) < n:
        tries += 1
        if tries > 1000 * (n + 1):
            raise RuntimeError("could not place points")
        p = _circle_point(rng, center, rng.choice(radii))
        if p in blocked or p in seen:
            continue
        seen.add(p)
        pts.append(p)
    return Configuration(frame, tuple(pts))


def random_frame(rng: random.Random, *, collinear: bool = False) -> AnchorFrame:
    """A random rational frame with a ∉ {1, -1}; b = 0 only on request."""
    while True:
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 5))
        if a not in (1, -1):
            break
    b = 0 if collinear else Fraction(rng.randint(1, 12), rng.randint(1, 5))
    return AnchorFrame(a, b)


def generate(family: str, size: int, frame: AnchorFrame, rng: random.Random | None = None) -> Configuration:
    if family == "grid":
        return grid(size, frame)
    if family == "collinear-diagnostic":
        return collinear_diagnostic(size, frame.a)
    if family == "random-rational":
        return random_rational(size, frame, rng or random.Random(0))
    raise ValueError(f"unknown family {family!r}")
