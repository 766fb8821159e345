import random

import pytest

from tridist.exactmath import BPoly, TriPoly
from tridist.zfcore import (
    ZfError,
    ZfInstance,
    count_zeros,
    degeneracy_check,
    discrete_curve,
    incidence_lower_bound,
    resultant_curve,
)

LINEAR = [(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, -1)]  # x + y - z
x_, y_ = BPoly.var(0), BPoly.var(1)


def inst(terms, A, B, C):
    return ZfInstance(TriPoly(terms), A, B, C)


def test_count_linear():
    z = inst(LINEAR, [1, 2], [1, 2], [2, 3, 4])
    M, fibers = count_zeros(z)
    assert M == 4 and {c: len(v) for c, v in fibers.items()} == {2: 1, 3: 2, 4: 1}


def test_count_positive_definite():
    F = [(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1), (0, 0, 0, 1)]
    assert inst(F, [-1, 0, 1], [0, 2], [0, 5]).M == 0


def test_count_product():
    z = inst([(1, 0, 1, 1), (0, 1, 1, -1)], [1, 2], [1, 2], [0, 5])
    assert z.M == 6


def test_zero_polynomial_rejected():
    with pytest.raises(ZfError):
        inst([], [1], [1], [1])


def test_discrete_curves():
    z = inst(LINEAR, [1, 2], [1, 2], [2, 3, 4])
    assert discrete_curve(z, 1, 1) == {(1, 1), (2, 2)}
    F = [(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1), (0, 0, 0, 1)]
    assert discrete_curve(inst(F, [0, 1], [0, 1], [0]), 0, 0) == set()
    deg = inst([(1, 0, 1, 1), (0, 1, 1, -1)], [1, 2], [1, 2], [0, 5])
    assert discrete_curve(deg, 1, 2) == {(a, b) for a in (1, 2) for b in (1, 2)}
    with pytest.raises(ZfError):
        discrete_curve(z, 3, 1)


def test_lower_bound_equality_case():
    rep = incidence_lower_bound(inst(LINEAR, [1, 2], [1, 2], [2, 3, 4]))
    assert rep["I"] == 6 and rep["sum_Mc2_over_d"] == "6" and rep["ok"]


def test_lower_bound_restricted():
    rep = incidence_lower_bound(inst(LINEAR, [1, 2], [1, 2], [2, 3]))
    assert rep["n"] == 2 and rep["M"] == 3 and rep["I"] >= 5 and rep["ok"]


def test_lower_bound_trivial_when_empty():
    F = [(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1), (0, 0, 0, 1)]
    rep = incidence_lower_bound(inst(F, [0, 1], [0, 1], [0, 1]))
    assert rep["M"] == 0 and rep["I"] == 0 and rep["ok"]


def test_degeneracy():
    assert degeneracy_check(inst([(1, 0, 1, 1), (0, 1, 1, -1)], [1, 2], [1, 2], [0, 5])) == [(1, 1), (2, 2)]
    assert degeneracy_check(inst(LINEAR, [1, 2], [1, 2], [2, 3])) == []
    # (x - 1)(y - 2) z³
    F = [(1, 1, 3, 1), (1, 0, 3, -2), (0, 1, 3, -1), (0, 0, 3, 2)]
    flagged = degeneracy_check(inst(F, [1, 3], [5, 2], [1]))
    assert (1, 5) in flagged and (1, 2) in flagged and (3, 2) in flagged


def test_resultant_curve():
    z = inst(LINEAR, [1, 2], [1, 2], [2, 3, 4])
    assert resultant_curve(z, 1, 1) == x_ - y_
    sq = inst([(0, 0, 2, 1), (1, 0, 0, -1), (0, 1, 0, -1)], [0], [0], [0])
    assert resultant_curve(sq, 0, 0) == (x_ - y_) ** 2
    deg = inst([(1, 0, 1, 1), (0, 1, 1, -1)], [1, 2], [1, 2], [0, 5])
    with pytest.raises(ZfError):
        resultant_curve(deg, 1, 1)
    flat = inst([(1, 0, 0, 1), (0, 1, 0, 1)], [1], [1], [1])
    with pytest.raises(ZfError):
        resultant_curve(flat, 1, 1)


def random_instance(rng):
    terms = [(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2), rng.randint(-3, 3)) for _ in range(rng.randint(1, 4))]
    terms.append((0, 0, 1, rng.choice((1, -1))))
    if TriPoly(terms).is_zero():
        terms.append((1, 1, 1, 1))
    pick = lambda: sorted(rng.sample(range(-3, 4), rng.randint(1, 4)))  # noqa: E731
    return inst(terms, pick(), pick(), pick())


def test_random_instances_chain_and_resultant():
    rng = random.Random(9)
    checked = 0
    for _ in range(200):
        z = random_instance(rng)
        rep = incidence_lower_bound(z, strict=False)
        assert rep["checks"]["containment"] and rep["checks"]["fiber_sum"]
        if not rep["degenerate_pairs"]:
            assert rep["ok"], rep
            checked += 1
        for a in z.A:
            for b in z.B:
                try:
                    res = resultant_curve(z, a, b)
                except ZfError:
                    continue
                for x, y in discrete_curve(z, a, b):
                    assert res(x, y) == 0
    assert checked >= 50


def test_from_json():
    z = ZfInstance.from_json({"monomials": [[1, 0, 0, "1/2"], [0, 0, 1, "-1"]], "A": ["2"], "B": [0], "C": ["1", "2"]})
    assert z.M == 1 and z.d == 1 and z.to_json()["monomials"][0] == [0, 0, 1, "-1"]
    with pytest.raises(ZfError):
        ZfInstance.from_json({"monomials": [[1, 0]], "A": [], "B": [], "C": []})
