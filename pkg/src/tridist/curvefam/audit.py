"""Coincidence, shared-component and intersection checks over curve families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..exactmath import BPoly, Rational, gcd_bivariate, q, resultant_in_second_var
from ..frame import AnchorFrame
from .curve import CurveError, CurvePoly, build_curve

Label = tuple[Rational, Rational]

# Specializations for the modular shared-factor filter.
_PRIME = 2**31 - 1
_SPECIALIZATIONS = (1234577,)
_CHUNK = 40000


def _check_frame(curves) -> AnchorFrame | None:
    frames = {c.frame for c in curves}
    if len(frames) > 1:
        raise CurveError("curves from different frames")
    return next(iter(frames), None)


def coincidence_groups(curves: list[CurvePoly]) -> list[list[Label]]:
    """Partition labels by identical canonical polynomial, in first-seen order."""
    _check_frame(curves)
    groups: dict[BPoly, list[Label]] = {}
    for c in curves:
        groups.setdefault(c.canonical, []).append(c.label)
    return list(groups.values())


# -- modular prefilter ----------------------------------------------------------

def _mod_int(c) -> int:
    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, _PRIME) % _PRIME


def _specialize_mod(H: BPoly, point: int, keep: int) -> tuple[int, ...]:
    """Coefficients (low first) of H mod p with one variable fixed at ``point``."""
    grid = H.grid if keep == 1 else H.swap().grid
    out = []
    for j in range(len(grid[0])):
        acc = 0
        for row in reversed(grid):
            acc = (acc * point + _mod_int(row[j])) % _PRIME
        out.append(acc)
    return tuple(out)


def _batched_modinv(x: np.ndarray) -> np.ndarray:
    result = np.ones_like(x)
    base = x.copy()
    e = _PRIME - 2
    while e:
        if e & 1:
            result = result * base % _PRIME
        base = base * base % _PRIME
        e >>= 1
    return result


def _nonzero_resultants(pairs, images) -> np.ndarray:
    """Boolean mask: True where the Sylvester determinant mod p is certainly nonzero.

    Elimination runs without row exchanges; a zero pivot leaves the pair
    undecided (False), which is always safe.
    """
    if not pairs:
        return np.zeros(0, dtype=bool)
    f0 = images[pairs[0][0]]
    g0 = images[pairs[0][1]]
    m, n = len(f0) - 1, len(g0) - 1
    size = m + n
    mats = np.zeros((len(pairs), size, size), dtype=np.int64)
    F = np.array([images[i][::-1] for i, _ in pairs], dtype=np.int64)
    G = np.array([images[j][::-1] for _, j in pairs], dtype=np.int64)
    for r in range(n):
        mats[:, r, r:r + m + 1] = F
    for r in range(m):
        mats[:, n + r, r:r + n + 1] = G
    ok = np.ones(len(pairs), dtype=bool)
    for k in range(size):
        piv = mats[:, k, k]
        ok &= piv != 0
        inv = _batched_modinv(np.where(piv == 0, 1, piv))
        if k + 1 < size:
            factors = mats[:, k + 1:, k] * inv[:, None] % _PRIME
            mats[:, k + 1:, :] = (
                mats[:, k + 1:, :] - factors[:, :, None] * mats[:, k, None, :] % _PRIME
            ) % _PRIME
    return ok


def _candidate_pairs(reps: list[BPoly]) -> list[tuple[int, int]]:
    """Pairs of distinct polynomials that might share a nonconstant factor.

    A common factor of positive degree in one variable survives
    specialization of the other variable at a point where neither leading
    coefficient vanishes mod p, forcing a zero resultant mod p there.  A pair
    is ruled out only when both directions give a nonzero determinant (or
    one polynomial is constant in the kept variable).
    """
    pairs = list(combinations(range(len(reps)), 2))
    cleared = np.ones(len(pairs), dtype=bool)
    for keep in (1, 0):
        images = [_specialize_mod(H, _SPECIALIZATIONS[0], keep) for H in reps]
        by_shape: dict = {}
        for idx, (i, j) in enumerate(pairs):
            by_shape.setdefault((len(images[i]), len(images[j])), []).append(idx)
        direction = np.zeros(len(pairs), dtype=bool)
        for (li, lj), idxs in by_shape.items():
            if min(li, lj) < 2:
                direction[idxs] = True
            else:
                for lo in range(0, len(idxs), _CHUNK):
                    part = idxs[lo:lo + _CHUNK]
                    direction[part] = _nonzero_resultants([pairs[k] for k in part], images)
        cleared &= direction
    return [pr for pr, c in zip(pairs, cleared) if not c]


# -- shared components ------------------------------------------------------------

@dataclass(frozen=True)
class SharedFactor:
    factor: BPoly
    labels: tuple[Label, ...]


def radical(f: BPoly) -> BPoly:
    """Square-free part f / gcd(f, f_s, f_t) (characteristic zero)."""
    g = gcd_bivariate(gcd_bivariate(f, f.diff(0)), f.diff(1))
    if g.total_degree <= 0:
        return f.canonical()
    return f.exact_div(g).canonical()


def _refine_basis(factors: list[BPoly]) -> list[BPoly]:
    """Square-free factors split along pairwise gcds until pairwise coprime."""
    basis = list(dict.fromkeys(radical(f) for f in factors))
    changed = True
    while changed:
        changed = False
        for f1, f2 in combinations(basis, 2):
            g = gcd_bivariate(f1, f2)
            if g.total_degree <= 0:
                continue
            parts = [g]
            for f in (f1, f2):
                rest = f.exact_div(g).canonical()
                if rest.total_degree > 0:
                    parts.append(rest)
            basis = [b for b in basis if b not in (f1, f2)]
            basis = list(dict.fromkeys(basis + parts))
            changed = True
            break
    return basis


def overlap_audit(curves: list[CurvePoly]) -> list[SharedFactor]:
    """Nonconstant factors shared by two or more curves, with all curves containing them.

    Coincident labels share their whole polynomial.  Distinct polynomials are
    compared through exact subresultant gcds after a modular prefilter; the
    gcds are split into a pairwise coprime basis and every basis element is
    tested for exact divisibility against every curve.
    """
    _check_frame(curves)
    groups: dict[BPoly, list[Label]] = {}
    for c in curves:
        groups.setdefault(c.canonical, []).append(c.label)
    reps = list(groups)
    found: list[BPoly] = [H for H, labels in groups.items() if len(labels) > 1]
    for i, j in _candidate_pairs(reps):
        g = gcd_bivariate(reps[i], reps[j])
        if g.total_degree > 0:
            found.append(g)
    out = []
    for f in _refine_basis(found):
        labels = []
        for H, ls in groups.items():
            if f.divides(H):
                labels.extend(ls)
        if len(labels) > 1:
            out.append(SharedFactor(f, tuple(sorted(labels))))
    out.sort(key=lambda s: (-len(s.labels), s.labels))
    return out


def known_shared_components(frame: AnchorFrame) -> list[BPoly]:
    """Components shared by arbitrarily many curves for structural reasons.

    When a = 0 (p3 on the perpendicular bisector of p1p2), reflecting q1
    across that bisector gives a partner with U = Y and V = X, so every
    curve γ_{X,X} contains the line Y = U.
    """
    if frame.a == 0 and frame.b != 0:
        return [(BPoly.var(0) - BPoly.var(1)).canonical()]
    return []


def intersection_guard(c1: CurvePoly, c2: CurvePoly) -> tuple[int, bool]:
    """(degree of Res_U(H1, H2), overlap flag).

    A resultant that vanishes identically means a shared component; the
    degree is reported as -1 then.  Otherwise Bézout caps it at 16.
    """
    if c1.frame != c2.frame:
        raise CurveError("curves from different frames")
    r = resultant_in_second_var(c1.canonical, c2.canonical)
    if r.is_zero():
        return -1, True
    return r.degree, False


@dataclass(frozen=True)
class LineReport:
    slope: Rational | None  # None for the vertical case a = -1
    intercept: Rational  # U-intercept, or the constant Y when vertical
    quartic: bool  # H == R**4 exactly

    def to_json(self) -> dict:
        from ..exactmath import to_str

        return {
            "slope": None if self.slope is None else to_str(self.slope),
            "intercept": to_str(self.intercept),
            "vertical": self.slope is None,
            "quartic_multiplicity": self.quartic,
        }


def collinear_diagnostics(frame: AnchorFrame, X, V) -> LineReport:
    """For b = 0 the curve is the line R = 0 counted four times."""
    if frame.b != 0:
        raise CurveError("collinear diagnostics need b = 0")
    c = build_curve(frame, X, V)
    R = c.R
    quartic = (c.H - R**4).is_zero()
    r0, rY, rU = R.coeff(0, 0), R.coeff(1, 0), R.coeff(0, 1)
    if rU == 0:
        return LineReport(None, q(Fraction(-r0) / rY), quartic)
    return LineReport(q(Fraction(-rY) / rU), q(Fraction(-r0) / rU), quartic)


def collinear_constant(curve: CurvePoly) -> Rational | None:
    """The rational c with H = c·R⁴, or None when no such c exists."""
    R4 = curve.R**4
    if R4.is_zero():
        return 0 if curve.H.is_zero() else None
    i, j, lead = R4.leading_term()
    c = q(Fraction(curve.H.coeff(i, j)) / lead)
    return c if (curve.H - R4 * c).is_zero() else None
