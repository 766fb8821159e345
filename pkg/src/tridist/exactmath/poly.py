"""Dense univariate, dense bivariate and sparse trivariate polynomials over Q.

All classes are immutable.  Univariate coefficients are stored lowest degree
first; bivariate grids are indexed ``[i][j]`` for the monomial
``s**i * t**j`` (``s`` the first variable, ``t`` the second).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .rational import Rational, q, qdiv, to_str


class ExactMathError(ValueError):
    """Raised on invalid exact-arithmetic input (zero polynomials, inexact division)."""


def _primitive_factor(coeffs: Iterable[Rational]) -> Fraction:
    """Positive rational c such that coeffs / c are coprime integers."""
    coeffs = [Fraction(c) for c in coeffs if c != 0]
    if not coeffs:
        return Fraction(1)
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    num = reduce(gcd, (abs(c.numerator) * (den // c.denominator) for c in coeffs), 0)
    return Fraction(num, den)


def _trim(coeffs: Sequence[Rational]) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(q(c) for c in coeffs[:end])


class UPoly:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(list(coeffs))
        self._hash = None

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-q(r), 1])
        return out

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("UPoly", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"UPoly({[str(c) for c in self.coeffs]})"

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _lift(other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly([a[k] + b[k] if k < len(b) else a[k] for k in range(len(a))])

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs])
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        out = UPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale(self, c) -> "UPoly":
        return self * q(c)

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = qdiv(c, lc)
            quot[k - dq] = f
            for j, oc in enumerate(other.coeffs):
                rem[k - dq + j] -= f * oc
        return UPoly(quot), UPoly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return UPoly([qdiv(c, other) for c in self.coeffs])
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ExactMathError("inexact polynomial division")
        return quot

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.exact_div(self.lc)

    def primitive_factor(self) -> Fraction:
        return _primitive_factor(self.coeffs)

    def canonical(self) -> "UPoly":
        """Coprime integer coefficients with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.primitive_factor()
        if self.lc < 0:
            c = -c
        return self.exact_div(q(c))

    def gcd(self, other: "UPoly") -> "UPoly":
        """Monic gcd over Q (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def compose_affine(self, scale, shift) -> "UPoly":
        """p(scale * x + shift)."""
        lin = UPoly([shift, scale])
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc


def _trim_grid(grid: Sequence[Sequence[Rational]]) -> tuple:
    rows = [list(r) for r in grid]
    width = max((len(r) for r in rows), default=0)
    rows = [r + [0] * (width - len(r)) for r in rows]
    while len(rows) > 1 and all(c == 0 for c in rows[-1]):
        rows.pop()
    while width > 1 and all(r[width - 1] == 0 for r in rows):
        width -= 1
    if not rows or width == 0:
        return ((0,),)
    return tuple(tuple(q(c) for c in r[:width]) for r in rows)


class BPoly:
    """Bivariate polynomial on a tight dense grid ``grid[i][j]`` ~ s^i t^j."""

    __slots__ = ("grid", "_hash")

    def __init__(self, grid: Sequence[Sequence] = ((0,),)):
        self.grid = _trim_grid(grid)
        self._hash = None

    @classmethod
    def const(cls, c) -> "BPoly":
        return cls([[c]])

    @classmethod
    def var(cls, which: int) -> "BPoly":
        return cls([[0, 1]]) if which else cls([[0], [1]])

    @classmethod
    def from_terms(cls, terms: dict) -> "BPoly":
        if not terms:
            return cls()
        di = max(i for i, _ in terms) + 1
        dj = max(j for _, j in terms) + 1
        grid = [[0] * dj for _ in range(di)]
        for (i, j), c in terms.items():
            grid[i][j] += c
        return cls(grid)

    @classmethod
    def from_upoly(cls, p: UPoly, which: int = 0) -> "BPoly":
        coeffs = p.coeffs or (0,)
        if which:
            return cls([list(coeffs)])
        return cls([[c] for c in coeffs])

    @classmethod
    def from_coeffs_in_second(cls, coeffs: Sequence[UPoly]) -> "BPoly":
        """Build from UPolys (in the first variable) multiplying t^0, t^1, ..."""
        terms = {}
        for j, p in enumerate(coeffs):
            for i, c in enumerate(p.coeffs):
                terms[(i, j)] = c
        return cls.from_terms(terms)

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.grid == ((0,),)

    @property
    def degrees(self) -> tuple[int, int]:
        """(degree in first variable, degree in second); (-1, -1) for zero."""
        if self.is_zero():
            return (-1, -1)
        return (len(self.grid) - 1, len(self.grid[0]) - 1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j, _ in self.terms()), default=-1)

    def terms(self):
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c != 0:
                    yield i, j, c

    def coeff(self, i: int, j: int) -> Rational:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[0]):
            return self.grid[i][j]
        return 0

    def coeffs_in_second(self) -> list[UPoly]:
        """Coefficients of t^0..t^deg as UPolys in s (empty list for zero)."""
        if self.is_zero():
            return []
        return [UPoly([row[j] for row in self.grid]) for j in range(len(self.grid[0]))]

    def swap(self) -> "BPoly":
        return BPoly([list(col) for col in zip(*self.grid)])

    def __eq__(self, other) -> bool:
        if isinstance(other, BPoly):
            return self.grid == other.grid
        if isinstance(other, (int, Fraction)):
            return self.grid == _trim_grid([[other]])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("BPoly", self.grid))
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{c}*s^{i}*t^{j}" for i, j, c in self.terms()]
        return "BPoly(" + (" + ".join(parts) or "0") + ")"

    def format(self, names: tuple[str, str] = ("s", "t")) -> str:
        """Human-readable form, highest graded-lex term first."""
        out = []
        for i, j, c in sorted(self.terms(), key=lambda e: (e[0] + e[1], e[0]), reverse=True):
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in zip(names, (i, j)) if e > 0
            )
            coef = to_str(abs(c))
            body = mono if mono and coef == "1" else (f"{coef}*{mono}" if mono else coef)
            out.append(("- " if c < 0 else "+ ") + body)
        if not out:
            return "0"
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _lift(other) -> "BPoly":
        if isinstance(other, BPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        di = max(len(self.grid), len(other.grid))
        dj = max(len(self.grid[0]), len(other.grid[0]))
        return BPoly(
            [[self.coeff(i, j) + other.coeff(i, j) for j in range(dj)] for i in range(di)]
        )

    __radd__ = __add__

    def __neg__(self) -> "BPoly":
        return BPoly([[-c for c in row] for row in self.grid])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BPoly([[c * other for c in row] for row in self.grid])
        if not isinstance(other, BPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BPoly()
        di = len(self.grid) + len(other.grid) - 1
        dj = len(self.grid[0]) + len(other.grid[0]) - 1
        out = [[0] * dj for _ in range(di)]
        oterms = list(other.terms())
        for i, j, c in self.terms():
            for k, l, d in oterms:
                out[i + k][j + l] += c * d
        return BPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BPoly":
        out = BPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, s, t):
        acc = 0
        for row in reversed(self.grid):
            inner = 0
            for c in reversed(row):
                inner = inner * t + c
            acc = acc * s + inner
        return acc

    def at_first(self, s) -> UPoly:
        """Specialize the first variable; result is a UPoly in the second."""
        return UPoly([UPoly([row[j] for row in self.grid])(s) for j in range(len(self.grid[0]))])

    def at_second(self, t) -> UPoly:
        """Specialize the second variable; result is a UPoly in the first."""
        return UPoly([UPoly(row)(t) for row in self.grid])

    def diff(self, which: int) -> "BPoly":
        if which:
            return BPoly([[j * c for j, c in enumerate(row)][1:] or [0] for row in self.grid])
        return BPoly([[i * c for c in row] for i, row in enumerate(self.grid)][1:] or [[0]])

    def exact_div(self, other) -> "BPoly":
        """Exact quotient; raises ExactMathError if ``other`` does not divide."""
        if isinstance(other, (int, Fraction)):
            return BPoly([[qdiv(c, other) for c in row] for row in self.grid])
        if isinstance(other, UPoly):
            other = BPoly.from_upoly(other, 0)
        if other.is_zero():
            raise ZeroDivisionError("bivariate division by zero")
        num = self.coeffs_in_second()
        den = other.coeffs_in_second()
        dd = len(den) - 1
        quot = [UPoly()] * max(len(num) - dd, 1)
        for k in range(len(num) - 1, dd - 1, -1):
            if num[k].is_zero():
                continue
            f = num[k].exact_div(den[-1])
            quot[k - dd] = f
            for j, dc in enumerate(den):
                num[k - dd + j] = num[k - dd + j] - f * dc
        if any(not c.is_zero() for c in num):
            raise ExactMathError("inexact bivariate division")
        return BPoly.from_coeffs_in_second(quot)

    def divides(self, other: "BPoly") -> bool:
        """True iff self divides other exactly."""
        try:
            other.exact_div(self)
        except ExactMathError:
            return False
        return True

    def leading_term(self) -> tuple[int, int, Rational]:
        """Leading term under graded lex order (first variable ranks higher)."""
        return max(self.terms(), key=lambda t: (t[0] + t[1], t[0]))

    def primitive_factor(self) -> Fraction:
        return _primitive_factor(c for _, _, c in self.terms())

    def canonical(self) -> "BPoly":
        """Coprime integer coefficients with positive graded-lex leading coefficient."""
        if self.is_zero():
            return self
        c = self.primitive_factor()
        if self.leading_term()[2] < 0:
            c = -c
        return self.exact_div(q(c))

    def interval_eval(self, s_box, t_box) -> tuple[Rational, Rational]:
        """Exact rational enclosure of the polynomial over a box."""
        lo_total = hi_total = 0
        s_pows = _interval_powers(s_box, len(self.grid))
        t_pows = _interval_powers(t_box, len(self.grid[0]))
        for i, j, c in self.terms():
            lo, hi = _interval_mul(s_pows[i], t_pows[j])
            if c >= 0:
                lo_total += c * lo
                hi_total += c * hi
            else:
                lo_total += c * hi
                hi_total += c * lo
        return lo_total, hi_total


def _interval_mul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def _interval_powers(box, count):
    lo, hi = box
    out = [(1, 1)]
    for k in range(1, count):
        if k % 2 == 0 and lo < 0 < hi:
            out.append((0, max(lo**k, hi**k)))
        else:
            vals = (lo**k, hi**k)
            out.append((min(vals), max(vals)))
    return out


class TriPoly:
    """Sparse trivariate polynomial ``{(i, j, k): coefficient}`` in (x, y, z)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else (
            ((i, j, k), c) for i, j, k, c in terms
        )
        for key, c in items:
            key = tuple(int(e) for e in key)
            if min(key) < 0:
                raise ExactMathError("negative exponent")
            acc[key] = acc.get(key, 0) + q(c)
        self.terms = {k: v for k, v in sorted(acc.items()) if v != 0}

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def __call__(self, x, y, z):
        return sum(c * x**i * y**j * z**k for (i, j, k), c in self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, TriPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TriPoly({self.terms})"

    def fix_y(self, y) -> BPoly:
        """F(x, y0, z) as a BPoly in (x, z)."""
        return BPoly.from_terms(_collect(((i, k), c * y**j) for (i, j, k), c in self.terms.items()))

    def fix_x(self, x) -> BPoly:
        """F(x0, y, z) as a BPoly in (y, z)."""
        return BPoly.from_terms(_collect(((j, k), c * x**i) for (i, j, k), c in self.terms.items()))

    def fix_xy(self, x, y) -> UPoly:
        """F(x0, y0, z) as a UPoly in z."""
        out: dict = {}
        for (i, j, k), c in self.terms.items():
            out[k] = out.get(k, 0) + c * x**i * y**j
        return UPoly([out.get(k, 0) for k in range(max(out, default=-1) + 1)])


def _collect(pairs):
    out: dict = {}
    for key, c in pairs:
        out[key] = out.get(key, 0) + c
    return out
