from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tridist.frame import (
    AnchorFrame,
    Configuration,
    FrameError,
    PlanePoint,
    distance_triple,
    load_configuration,
    normalize,
)

from .conftest import rationals

F01 = AnchorFrame(0, 1)


def sqdist(p, r):
    return (Fraction(p[0]) - r[0]) ** 2 + (Fraction(p[1]) - r[1]) ** 2


def test_flags():
    assert AnchorFrame(0, 0).collinear
    assert AnchorFrame(1, 2).covertical_p1
    assert AnchorFrame(-1, 2).covertical_p2
    assert F01.flags() == {"collinear": False, "covertical_p1": False, "covertical_p2": False}


@pytest.mark.parametrize("pt, triple", [((0, 0), (1, 1, 1)), ((1, 1), (1, 5, 1)), ((2, 0), (1, 9, 5))])
def test_distance_triple_examples(pt, triple):
    assert tuple(distance_triple(F01, pt)) == triple


def test_distance_triple_anchor_collision():
    with pytest.raises(FrameError):
        distance_triple(F01, (0, 1))


def test_configuration_invariants():
    with pytest.raises(FrameError):
        Configuration(F01, [(1, 0)])
    with pytest.raises(FrameError):
        Configuration(F01, [(2, 2), (2, 2)])


def test_normalize_identity():
    config, scale = normalize((1, 0), (-1, 0), (0, 1), [(3, 4)])
    assert config.frame == F01 and scale == 1
    assert config.points == (PlanePoint(3, 4),)


def test_normalize_vertical_anchors():
    config, scale = normalize((0, 0), (0, 2), (1, 1), [])
    assert config.frame == AnchorFrame(0, 1) and scale == 1


def test_normalize_scaled():
    config, scale = normalize((0, 0), (4, 0), (2, 2), [(1, 5)])
    assert config.frame == AnchorFrame(0, 1) and scale == Fraction(1, 4)
    # one squared distance rescaled
    assert distance_triple(config.frame, config.points[0]).Z == sqdist((1, 5), (2, 2)) * scale


def test_normalize_errors():
    with pytest.raises(FrameError):
        normalize((1, 1), (1, 1), (0, 1), [])
    with pytest.raises(FrameError):
        normalize((0, 0), (4, 0), (2, 2), [(4, 0)])
    with pytest.raises(FrameError):
        normalize((0, 0), (4, 0), (2, 2), [(1, 1), (1, 1)])


def test_load_configuration():
    config, scale = load_configuration({"p3": ["0", "1"], "points": [["1/2", "3"]]})
    assert config.points[0] == PlanePoint(Fraction(1, 2), 3) and scale == 1
    config, scale = load_configuration({"p1": ["0", "0"], "p2": ["4", "0"], "p3": ["2", "2"], "points": []})
    assert config.frame == F01 and scale == Fraction(1, 4)


points = st.tuples(rationals(-6, 6, 3), rationals(-6, 6, 3))


@given(points)
def test_y_minus_x_is_4x(p):
    assume(p not in {(1, 0), (-1, 0), (0, 1)})
    t = distance_triple(F01, p)
    assert t.Y - t.X == 4 * p[0]


@given(points, points, points, st.lists(points, max_size=5, unique=True))
def test_normalize_scales_distances(p1, p2, p3, pts):
    assume(p1 != p2)
    anchors = {p1, p2, p3}
    pts = [p for p in pts if p not in anchors]
    config, scale = normalize(p1, p2, p3, pts)
    for orig, new in zip(pts, config.points):
        t = distance_triple(config.frame, new)
        assert (t.X, t.Y, t.Z) == tuple(sqdist(orig, a) * scale for a in (p1, p2, p3))
    assert config.frame.b >= 0
    for k, anchor in enumerate((p1, p2, p3)):
        before = {sqdist(p, anchor) for p in pts}
        after = {distance_triple(config.frame, p)[k] for p in config.points}
        assert len(before) == len(after)
