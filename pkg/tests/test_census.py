from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from tridist.census import (
    Quadruple,
    build_census,
    census_report,
    enumerate_equal_pairs,
    pair_count_Q,
    sanity_bound_ok,
)
from tridist.frame import AnchorFrame, Configuration

F01 = AnchorFrame(0, 1)
EXAMPLE = Configuration(F01, [(0, 0), (1, 1), (-1, 1), (2, 0)])


def test_example_census():
    c = build_census(EXAMPLE)
    assert c.D == (1, 5, 9) and c.kappa == 3
    assert {z: len(m) for z, m in c.fibers.items()} == {1: 3, 5: 1}
    assert pair_count_Q(c) == (3, Fraction(2, 3))


def test_single_and_empty():
    assert build_census(Configuration(F01, [(0, 0)])).D == (1,)
    empty = build_census(Configuration(F01, []))
    assert empty.kappa == 0 and pair_count_Q(empty) == (0, None)


def test_equal_pairs_example():
    c = build_census(Configuration(F01, [(1, 1), (-1, 1)]))
    pairs = enumerate_equal_pairs(c)
    assert pairs == [((0, 1), Quadruple(1, 5, 5, 1)), ((1, 0), Quadruple(5, 1, 1, 5))]


def test_fiber_of_three_and_singletons():
    c = build_census(EXAMPLE)
    assert len(enumerate_equal_pairs(c, EXAMPLE)) == 6
    singles = build_census(Configuration(F01, [(0, 0), (3, 3)]))
    assert enumerate_equal_pairs(singles) == [] and pair_count_Q(singles)[0] == 0


def test_single_fiber():
    pts = [(3, 1), (-3, 1), (0, 4), (0, -2)]
    c = build_census(Configuration(F01, pts))
    assert len(c.fibers) == 1 and pair_count_Q(c)[0] == 6


def test_report_fields():
    rep = census_report(build_census(EXAMPLE))
    assert rep["D"] == ["1", "5", "9"] and rep["lower_bound"] == "2/3"
    assert rep["lower_bound_ok"] and rep["sanity_bound_ok"]


lattice = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), max_size=25, unique=True)


@given(lattice)
def test_q_identity_bound_and_sanity(pts):
    pts = [p for p in pts if p not in {(1, 0), (-1, 0), (0, 1)}]
    c = build_census(Configuration(F01, pts))
    Q, bound = pair_count_Q(c)
    assert 2 * Q == len(enumerate_equal_pairs(c))
    assert sum(len(m) for m in c.fibers.values()) == c.n
    assert all(z in c.D for z in c.fibers)
    if c.kappa:
        assert Q >= bound
    assert sanity_bound_ok(c) and c.n <= 2 * c.kappa**2
