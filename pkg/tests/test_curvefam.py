import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given
from hypothesis import strategies as st

from tridist.census import build_census, enumerate_equal_pairs
from tridist.curvefam import (
    CurveError,
    build_curve,
    coincidence_groups,
    collinear_constant,
    collinear_diagnostics,
    critical_points,
    dual_membership,
    intersection_guard,
    is_ghost,
    known_shared_components,
    membership,
    on_algebraic_curve,
    overlap_audit,
    reconstruct_witnesses,
    recover_from_extremal,
    recovery_report,
    v_quadratic,
    within_bounds,
    witness_membership,
)
from tridist.exactmath import BPoly, UPoly
from tridist.frame import AnchorFrame
from tridist.lab.generators import random_frame, random_rational

from .conftest import rationals

F01 = AnchorFrame(0, 1)
Y_, U_ = BPoly.var(0), BPoly.var(1)
nonneg = rationals(0, 30, 4)


def frames(collinear=False):
    a = rationals(-5, 5, 4).filter(lambda v: v not in (1, -1))
    b = st.just(0) if collinear else rationals(1, 5, 4)
    return st.builds(AnchorFrame, a, b)


# -- construction ------------------------------------------------------------

def test_example_curve_parts():
    c = build_curve(F01, 1, 1)
    assert c.A == 1 - ((Y_ - 5) * Fraction(1, 4)) ** 2
    assert c.B == 1 - ((U_ - 5) * Fraction(1, 4)) ** 2
    assert c.R == (U_ - Y_) * Fraction(1, 4)
    assert c.H(1, 1) == 0 and c.H(1, 5) == 0
    assert c.H(1, 2) == Fraction(9, 64)


def test_negative_label_rejected():
    with pytest.raises(CurveError):
        build_curve(F01, -1, 2)


def test_four_conjugate_identity():
    a, b, X, V, Y, U, sA, sB = sp.symbols("a b X V Y U sA sB")
    A = X - ((Y - X) / 4 - 1) ** 2
    B = V - ((V - U) / 4 + 1) ** 2
    R = (V - X) / 2 - (1 - a) * (Y - X) / 4 - (1 + a) * (V - U) / 4
    prod = 1
    for s in (1, -1):
        for t in (1, -1):
            prod *= t * b * sB - s * b * sA - R
    prod = sp.expand(prod).subs({sA**2: A, sB**2: B})
    prod = sp.expand(sp.expand(prod).subs({sA**4: A**2, sB**4: B**2}))
    closed = sp.expand((b**2 * A + b**2 * B - R**2) ** 2 - 4 * b**4 * A * B)
    assert sp.expand(prod - closed) == 0


@given(frames(), nonneg, nonneg)
def test_degree_four_generic(frame, X, V):
    H = build_curve(frame, X, V).H
    assert H.total_degree <= 4
    assert H.degrees == (4, 4)


@given(frames(), nonneg, nonneg)
def test_matches_sympy_expansion(frame, X, V):
    a, b = (sp.Rational(str(v)) for v in (frame.a, frame.b))
    Xs, Vs = sp.Rational(str(X)), sp.Rational(str(V))
    Y, U = sp.symbols("Y U")
    A = Xs - ((Y - Xs) / 4 - 1) ** 2
    B = Vs - ((Vs - U) / 4 + 1) ** 2
    R = (Vs - Xs) / 2 - (1 - a) * (Y - Xs) / 4 - (1 + a) * (Vs - U) / 4
    ref = sp.Poly(sp.expand((b**2 * A + b**2 * B - R**2) ** 2 - 4 * b**4 * A * B), Y, U)
    ours = build_curve(frame, X, V).H
    assert {(i, j): sp.Rational(str(c)) for i, j, c in ours.terms()} == {m: c for m, c in ref.terms()}


# -- membership and witnesses -------------------------------------------------

def test_membership_examples():
    c = build_curve(F01, 1, 1)
    assert membership(c, 5, 5)
    assert membership(c, 2, 2)
    assert not membership(c, 1, 2)


def test_ghost_point():
    # A = B = -3 and R = 0: H vanishes without a real witness
    c = build_curve(F01, 1, 1)
    assert on_algebraic_curve(c, 13, 13) and not membership(c, 13, 13)
    assert is_ghost(c, 13, 13) and not is_ghost(c, 5, 5)


def test_witness_examples():
    w = reconstruct_witnesses(F01, (1, 5, 5, 1))
    assert len(w) == 2
    assert any(x.matches((1, 1), (-1, 1)) for x in w)
    assert any(x.matches((1, -1), (-1, -1)) for x in w)
    (only,) = reconstruct_witnesses(F01, (1, 1, 1, 1))
    assert only.matches((0, 0), (0, 0))
    w = reconstruct_witnesses(F01, (1, 9, 9, 1))
    assert any(x.matches((2, 0), (-2, 0)) for x in w)


def test_witness_errors():
    with pytest.raises(CurveError):
        reconstruct_witnesses(F01, (1, 20, 1, 1))  # negative radicand
    with pytest.raises(CurveError):
        reconstruct_witnesses(F01, (1, 1, 5, 2))


def test_dual_examples():
    assert dual_membership(F01, 5, 5, 1, 1)
    assert not dual_membership(F01, 1, 2, 1, 1)


@given(frames(), nonneg, nonneg, nonneg, nonneg)
def test_duality_and_witness_oracle(frame, X, V, Y, U):
    m = membership(build_curve(frame, X, V), Y, U)
    assert m == dual_membership(frame, Y, U, X, V)
    assert m == witness_membership(frame, X, Y, U, V)


def test_duality_on_members():
    rng = random.Random(3)
    for _ in range(40):
        frame = random_frame(rng)
        config = random_rational(rng.randint(2, 6), frame, rng)
        for _, quad in enumerate_equal_pairs(build_census(config)):
            X, Y, U, V = quad
            assert dual_membership(frame, Y, U, X, V)


def test_soundness_and_witness_multiplicity():
    rng = random.Random(11)
    for _ in range(30):
        frame = random_frame(rng)
        config = random_rational(rng.randint(2, 8), frame, rng)
        census = build_census(config)
        for (i, j), quad in enumerate_equal_pairs(census):
            X, Y, U, V = quad
            assert membership(build_curve(frame, X, V), Y, U)
            ws = reconstruct_witnesses(frame, quad)
            assert 1 <= len(ws) <= 4
            assert any(w.matches(config.points[i], config.points[j]) for w in ws)
            assert within_bounds(X, Y) and within_bounds(V, U)


def test_within_bounds():
    assert within_bounds(1, 9) and not within_bounds(1, Fraction(91, 10))


# -- recovery ---------------------------------------------------------------

def test_v_quadratic_literal_and_consistent():
    assert v_quadratic(F01, 5, radicand_divisor=4) == UPoly([5, -14, 5])
    assert v_quadratic(F01, 5) == UPoly([1, -10, 1])


def test_recover_covertical_branch():
    cands = recover_from_extremal(AnchorFrame(-1, 1), 1, 7)
    assert len(cands) == 2
    assert all(c.V.exact and c.V.lo == 3 for c in cands)


def test_recover_rejects_collinear():
    with pytest.raises(ValueError):
        recover_from_extremal(AnchorFrame(0, 0), 1, 1)


@given(frames(), rationals(-10, 40, 4), rationals(-10, 40, 4))
def test_recover_at_most_four(frame, Y0, U0):
    assert len(recover_from_extremal(frame, Y0, U0)) <= 4


def test_recovery_at_smooth_points():
    curve = build_curve(AnchorFrame(Fraction(1, 3), 2), 5, 2)
    rep = recovery_report(curve)
    assert rep["kinds"]["smooth"] == 4 and rep["recovered"]["smooth"] == 4
    for cp in critical_points(curve):
        assert cp.Y.width <= Fraction(1, 2**40)


def test_recovery_golden_suite(golden_dir):
    from tridist.lab.selftest import check_recovery

    assert check_recovery(golden_dir)["ok"]


# -- coincidences, overlaps, guard --------------------------------------------

def test_coincidence_collinear_example():
    frame = AnchorFrame(0, 0)
    curves = [build_curve(frame, X, V) for X, V in ((1, 3), (2, 4), (5, 7))]
    assert coincidence_groups(curves) == [[(1, 3), (2, 4), (5, 7)]]


def test_coincidence_distinct_and_single():
    curves = [build_curve(F01, 1, 1), build_curve(F01, 1, 5)]
    assert len(coincidence_groups(curves)) == 2
    assert coincidence_groups(curves[:1]) == [[(1, 1)]]


def test_coincidence_mixed_frames():
    with pytest.raises(ValueError):
        coincidence_groups([build_curve(F01, 1, 1), build_curve(AnchorFrame(2, 1), 1, 1)])


def test_overlap_duplicates_share_whole_curve():
    c = build_curve(AnchorFrame(Fraction(1, 3), 2), 2, 3)
    (shared,) = overlap_audit([c, c])
    assert shared.factor == c.canonical.canonical() or shared.factor.divides(c.canonical)
    assert len(shared.labels) == 2


def test_overlap_collinear_line():
    frame = AnchorFrame(0, 0)
    curves = [build_curve(frame, X, V) for X, V in ((1, 3), (2, 4), (5, 7), (1, 1))]
    shared = overlap_audit(curves)
    line = (Y_ - U_ - 2).canonical()
    assert any(s.factor == line and set(s.labels) == {(1, 3), (2, 4), (5, 7)} for s in shared)


def test_overlap_frame01_over_d15():
    curves = [build_curve(F01, X, V) for X in (1, 5) for V in (1, 5)]
    shared = overlap_audit(curves)
    assert [(s.factor, s.labels) for s in shared] == [((Y_ - U_).canonical(), ((1, 1), (5, 5)))]
    assert all(len(s.labels) <= 4 for s in shared)


def test_generic_frame_has_no_shared_factors():
    frame = AnchorFrame(Fraction(-2, 5), Fraction(7, 3))
    curves = [build_curve(frame, X, V) for X in range(1, 7) for V in range(1, 7)]
    assert overlap_audit(curves) == []
    assert known_shared_components(frame) == []


@pytest.mark.parametrize("X", [1, 2, Fraction(9, 4), 7])
def test_isosceles_frame_shares_diagonal(X):
    # a = 0: γ_{X,X} contains Y = U for every X, so the containing set is unbounded
    frame = AnchorFrame(0, Fraction(3, 2))
    assert (Y_ - U_).divides(build_curve(frame, X, X).canonical)
    assert known_shared_components(frame) == [(Y_ - U_).canonical()]


def test_guard_examples():
    deg, overlap = intersection_guard(build_curve(F01, 1, 1), build_curve(F01, 1, 5))
    assert deg == 10 and not overlap
    c = build_curve(F01, 2, 3)
    assert intersection_guard(c, c) == (-1, True)


@given(frames(), nonneg, nonneg, nonneg, nonneg)
def test_guard_bezout(frame, X1, V1, X2, V2):
    c1, c2 = build_curve(frame, X1, V1), build_curve(frame, X2, V2)
    assume(c1.canonical != c2.canonical)
    deg, overlap = intersection_guard(c1, c2)
    assert overlap or 0 <= deg <= 16


# -- collinear ----------------------------------------------------------------

def test_collinear_examples():
    rep = collinear_diagnostics(AnchorFrame(0, 0), 1, 3)
    assert rep.slope == 1 and rep.intercept == -2 and rep.quartic
    assert collinear_diagnostics(AnchorFrame(0, 0), 4, 4).intercept == 0
    assert collinear_diagnostics(AnchorFrame(Fraction(1, 3), 0), 2, 9).slope == Fraction(1, 2)


def test_collinear_vertical_and_error():
    rep = collinear_diagnostics(AnchorFrame(-1, 0), 2, 5)
    assert rep.slope is None and rep.to_json()["vertical"]
    with pytest.raises(CurveError):
        collinear_diagnostics(F01, 1, 1)


@given(frames(collinear=True), nonneg, nonneg)
def test_collinear_quartic(frame, X, V):
    c = build_curve(frame, X, V)
    k = collinear_constant(c)
    assert k is not None and (c.H - c.R**4 * k).is_zero()
    assert collinear_diagnostics(frame, X, V).slope == Fraction(1 - frame.a) / (1 + frame.a)
