"""Zeros of a trivariate polynomial on a finite grid A×B×C and the discrete curves γ_{a,b}."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantViolation
from .exactmath import BPoly, TriPoly, q, resultant_separated, to_str


class ZfError(ValueError):
    pass


@dataclass(frozen=True)
class ZfInstance:
    F: TriPoly
    A: tuple
    B: tuple
    C: tuple
    d: int = field(init=False)
    M: int = field(init=False)
    fibers: dict = field(init=False, repr=False)

    def __post_init__(self):
        if self.F.is_zero():
            raise ZfError("F is the zero polynomial")
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, tuple(sorted({q(v) for v in getattr(self, name)})))
        object.__setattr__(self, "d", self.F.total_degree)
        M, fibers = _zeros(self)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "fibers", fibers)

    @property
    def n(self) -> int:
        return max(len(self.A), len(self.B), len(self.C))

    @classmethod
    def from_json(cls, data: dict) -> "ZfInstance":
        try:
            F = TriPoly((int(i), int(j), int(k), q(c)) for i, j, k, c in data["monomials"])
            return cls(F, [q(v) for v in data["A"]], [q(v) for v in data["B"]], [q(v) for v in data["C"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ZfError(f"malformed instance: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "monomials": [[i, j, k, to_str(c)] for (i, j, k), c in self.F.terms.items()],
            "A": [to_str(v) for v in self.A],
            "B": [to_str(v) for v in self.B],
            "C": [to_str(v) for v in self.C],
        }


def _zeros(inst: ZfInstance) -> tuple[int, dict]:
    fibers: dict = {c: [] for c in inst.C}
    for a in inst.A:
        for b in inst.B:
            p = inst.F.fix_xy(a, b)
            for c in inst.C:
                if p(c) == 0:
                    fibers[c].append((a, b))
    fibers = {c: tuple(v) for c, v in fibers.items()}
    return sum(len(v) for v in fibers.values()), fibers


def count_zeros(inst: ZfInstance) -> tuple[int, dict]:
    """M = |Z(F) ∩ A×B×C| and the fibers Π_c."""
    return _zeros(inst)


def _curve_tables(inst: ZfInstance):
    # xs[b, z] = {x : F(x, b, z) = 0}, ys[a, z] = {y : F(a, y, z) = 0}
    F = inst.F
    xs = {(b, z): [x for x in inst.A if F(x, b, z) == 0] for b in inst.B for z in inst.C}
    ys = {(a, z): [y for y in inst.B if F(a, y, z) == 0] for a in inst.A for z in inst.C}
    return xs, ys


def _curve(inst: ZfInstance, a, b, tables) -> set:
    xs, ys = tables
    out = set()
    for z in inst.C:
        for x in xs[b, z]:
            for y in ys[a, z]:
                out.add((x, y))
    return out


def discrete_curve(inst: ZfInstance, a, b) -> set:
    """{(x, y) ∈ A×B : F(x, b, z) = F(a, y, z) = 0 for some z ∈ C}."""
    a, b = q(a), q(b)
    if a not in inst.A or b not in inst.B:
        raise ZfError("(a, b) must lie in A×B")
    return _curve(inst, a, b, _curve_tables(inst))


def degeneracy_check(inst: ZfInstance) -> list[tuple]:
    """Pairs (a, b) whose vertical line carries F ≡ 0."""
    return [(a, b) for a in inst.A for b in inst.B if inst.F.fix_xy(a, b).is_zero()]


def resultant_curve(inst: ZfInstance, a, b) -> BPoly:
    """Res_z(F(x, b, z), F(a, y, z)) as a polynomial in (x, y)."""
    a, b = q(a), q(b)
    if inst.F.fix_xy(a, b).is_zero():
        raise ZfError("F vanishes on the vertical line over (a, b)")
    f = inst.F.fix_y(b)
    g = inst.F.fix_x(a)
    if f.degrees[1] <= 0 or g.degrees[1] <= 0:
        raise ZfError("F(x, b, z) and F(a, y, z) must both depend on z")
    res = resultant_separated(f, g)
    if res.is_zero():
        raise ZfError("F(x, b, z) and F(a, y, z) share a factor in z")
    return res


def incidence_lower_bound(inst: ZfInstance, *, strict: bool = True) -> dict:
    """I = Σ |γ_{a,b}| against (1/d)Σ M_c² and M²/(dn).

    The bounds and the fiber multiplicity are asserted only when no vertical
    line is degenerate; containment is always asserted.
    """
    d, n, M = inst.d, inst.n, inst.M
    tables = _curve_tables(inst)
    curves = {(a, b): _curve(inst, a, b, tables) for a in inst.A for b in inst.B}
    I = sum(len(c) for c in curves.values())  # noqa: E741
    sum_sq = sum(len(v) ** 2 for v in inst.fibers.values())
    cs_bound = Fraction(sum_sq, d) if d > 0 else None
    m_bound = Fraction(M * M, d * n) if d > 0 and n > 0 else None

    containment_failures = []
    shared = Counter()
    for c, pts in inst.fibers.items():
        for p1 in pts:
            for p2 in pts:
                shared[p1, p2] += 1
                a1, b1 = p1
                a2, b2 = p2
                if (a1, b2) not in curves[a2, b1]:
                    containment_failures.append({"c": to_str(c), "p1": [to_str(a1), to_str(b1)], "p2": [to_str(a2), to_str(b2)]})
    degenerate = degeneracy_check(inst)
    bad = set(degenerate)
    max_mult = max((k for (p1, p2), k in shared.items() if p1 not in bad and p2 not in bad), default=0)

    checks = {"containment": not containment_failures, "fiber_sum": sum(len(v) for v in inst.fibers.values()) == M}
    if not degenerate and d > 0:
        checks["I_ge_sum_Mc2_over_d"] = I >= cs_bound
        checks["sum_Mc2_over_d_ge_M2_over_dn"] = cs_bound >= m_bound
        checks["fiber_multiplicity_le_d"] = max_mult <= d
    sizes = (len(inst.A), len(inst.B), len(inst.C))
    report = {
        "d": d,
        "n": n,
        "sizes": list(sizes),
        "M": M,
        "fibers": {to_str(c): len(v) for c, v in inst.fibers.items()},
        "I": I,
        "sum_Mc2_over_d": None if cs_bound is None else to_str(cs_bound),
        "M2_over_dn": None if m_bound is None else to_str(m_bound),
        "max_fiber_multiplicity": max_mult,
        "degenerate_pairs": [[to_str(a), to_str(b)] for a, b in degenerate],
        "checks": checks,
        "ok": all(checks.values()),
        "asymmetric_scale": (sizes[0] * sizes[1]) ** (2 / 3) * sizes[2] ** 0.5,
    }
    if containment_failures:
        report["counterexamples"] = containment_failures[:20]
    if strict and not report["ok"]:
        raise InvariantViolation("zero-count incidence chain violated", report)
    return report
