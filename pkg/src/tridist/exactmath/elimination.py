"""Sylvester resultants and subresultant gcds."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .poly import BPoly, ExactMathError, UPoly
from .rational import q


def bareiss_det(matrix: Sequence[Sequence], exact_div: Callable, one=1):
    """Fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must return the exact quotient a / b.  Entries only
    need ``+``, ``-``, ``*`` and a zero test via ``== 0`` or ``is_zero()``.
    """
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    negate = False
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    negate = not negate
                    break
            else:
                return m[k][k]
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - mik * row_k[j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if negate else det


def _is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def sylvester_matrix(f: Sequence, g: Sequence, zero) -> list[list]:
    """Sylvester matrix of two coefficient lists given lowest degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fh, gh = list(reversed(f)), list(reversed(g))
    for r in range(n):
        rows.append([zero] * r + fh + [zero] * (size - r - m - 1))
    for r in range(m):
        rows.append([zero] * r + gh + [zero] * (size - r - n - 1))
    return rows


def univariate_resultant(f: UPoly, g: UPoly):
    """Sylvester resultant of two nonzero univariate polynomials over Q."""
    if f.is_zero() or g.is_zero():
        raise ExactMathError("resultant of a zero polynomial")
    mat = sylvester_matrix(list(f.coeffs), list(g.coeffs), 0)
    return q(bareiss_det(mat, lambda a, b: Fraction(a) / b))


def resultant_in_second_var(f: BPoly, g: BPoly) -> UPoly:
    """Res_t(f, g) for f, g in Q[s][t]; a univariate polynomial in s.

    Identically zero exactly when f and g share a factor of positive degree
    in t.
    """
    if f.is_zero() or g.is_zero():
        raise ExactMathError("resultant of a zero polynomial")
    mat = sylvester_matrix(f.coeffs_in_second(), g.coeffs_in_second(), UPoly())
    det = bareiss_det(mat, lambda a, b: a.exact_div(b), one=UPoly.const(1))
    return det if isinstance(det, UPoly) else UPoly.const(det)


def resultant_separated(f: BPoly, g: BPoly) -> BPoly:
    """Eliminate the shared second variable from f(x, t) and g(y, t).

    The first variable of ``f`` becomes the first variable of the result and
    the first variable of ``g`` the second, so Res_t(x + 1 - t, 1 + y - t)
    is x - y.
    """
    if f.is_zero() or g.is_zero():
        raise ExactMathError("resultant of a zero polynomial")
    fc = [BPoly.from_upoly(c, 0) for c in f.coeffs_in_second()]
    gc = [BPoly.from_upoly(c, 1) for c in g.coeffs_in_second()]
    mat = sylvester_matrix(fc, gc, BPoly())
    det = bareiss_det(mat, lambda a, b: a.exact_div(b), one=BPoly.const(1))
    return det if isinstance(det, BPoly) else BPoly.const(det)


# -- subresultant gcd in Q[s][t] ----------------------------------------------

def _trim(p: list[UPoly]) -> list[UPoly]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _content(p: list[UPoly]) -> UPoly:
    out = UPoly()
    for c in p:
        out = out.gcd(c)
        if out.degree == 0:
            break
    return out


def _prem(a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lcb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] = r[shift + j] - lr * bc
        r = _trim(r)
        e -= 1
    if e > 0:
        factor = lcb**e
        r = [c * factor for c in r]
    return r


def gcd_bivariate(f: BPoly, g: BPoly) -> BPoly:
    """Canonical gcd of two bivariate polynomials.

    Subresultant PRS in the second variable over Q[s], with contents handled
    separately; gcd(f, 0) is canonical(f).
    """
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    a, b = f.coeffs_in_second(), g.coeffs_in_second()
    if len(b) > len(a):
        a, b = b, a
    ca, cb = _content(a), _content(b)
    d = ca.gcd(cb)
    a = [c.exact_div(ca) for c in a]
    b = [c.exact_div(cb) for c in b]
    g_, h = UPoly.const(1), UPoly.const(1)
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [UPoly.const(1)]
            break
        a = b
        divisor = g_ * h**delta
        b = [c.exact_div(divisor) for c in r]
        g_ = a[-1]
        if delta == 1:
            h = g_
        elif delta > 1:
            h = (g_**delta).exact_div(h ** (delta - 1))
    cb = _content(b)
    b = [c.exact_div(cb) * d for c in b]
    return BPoly.from_coeffs_in_second(b).canonical()


def squarefree_part(f: UPoly) -> UPoly:
    """f / gcd(f, f') (monic)."""
    if f.is_zero():
        raise ExactMathError("square-free part of the zero polynomial")
    g = f.gcd(f.derivative())
    return f.exact_div(g).monic()


__all__ = [
    "bareiss_det",
    "gcd_bivariate",
    "resultant_in_second_var",
    "resultant_separated",
    "squarefree_part",
    "sylvester_matrix",
    "univariate_resultant",
]
