"""Distinct squared distances, p3-fibers and the equal-distance pair count."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .exactmath.rational import Rational, q, to_str
from .frame import Configuration, distance_triple


class Quadruple(NamedTuple):
    """Squared distances (|p1q1|², |p2q1|², |p1q2|², |p2q2|²) of an ordered pair."""

    X: Rational
    Y: Rational
    U: Rational
    V: Rational


@dataclass(frozen=True)
class DistanceCensus:
    n: int
    D: tuple[Rational, ...]
    triples: tuple
    fibers: dict  # Z -> tuple of point indices, sorted by Z
    per_anchor: tuple[int, int, int]

    @property
    def kappa(self) -> int:
        return len(self.D)

    @property
    def fiber_sizes(self) -> list[int]:
        return [len(v) for v in self.fibers.values()]


def build_census(config: Configuration) -> DistanceCensus:
    triples = tuple(distance_triple(config.frame, p) for p in config.points)
    fibers = defaultdict(list)
    for idx, t in enumerate(triples):
        fibers[t.Z].append(idx)
    per_anchor = tuple(len({t[k] for t in triples}) for k in range(3))
    D = tuple(sorted({v for t in triples for v in t}))
    return DistanceCensus(
        n=len(triples),
        D=D,
        triples=triples,
        fibers={z: tuple(fibers[z]) for z in sorted(fibers)},
        per_anchor=per_anchor,
    )


def pair_count_Q(census: DistanceCensus) -> tuple[int, Rational | None]:
    """Unordered equal-p3-distance pairs and the bound n²/(2κ) − n/2."""
    Q = sum(comb(len(f), 2) for f in census.fibers.values())
    if census.kappa == 0:
        return Q, None
    n = census.n
    return Q, q(Fraction(n * n, 2 * census.kappa) - Fraction(n, 2))


def enumerate_equal_pairs(census: DistanceCensus, config: Configuration | None = None):
    """Every ordered pair of distinct points in a common fiber, with its quadruple.

    The quadruple comes from the census triples; ``config`` is accepted for
    symmetry with the other builders and only sanity-checked.
    """
    if config is not None and config.n != census.n:
        raise ValueError("census does not belong to this configuration")
    out = []
    tr = census.triples
    for members in census.fibers.values():
        for i in members:
            for j in members:
                if i != j:
                    out.append(((i, j), Quadruple(tr[i].X, tr[i].Y, tr[j].X, tr[j].Y)))
    out.sort(key=lambda e: e[0])
    return out


def sanity_bound_ok(census: DistanceCensus) -> bool:
    """n <= 2κ²: a point is pinned to two choices by its (X, Z) pair."""
    return census.n <= 2 * census.kappa**2


def census_report(census: DistanceCensus) -> dict:
    Q, bound = pair_count_Q(census)
    return {
        "n": census.n,
        "kappa": census.kappa,
        "D": [to_str(d) for d in census.D],
        "per_anchor": list(census.per_anchor),
        "fiber_sizes": {to_str(z): len(m) for z, m in census.fibers.items()},
        "Q": Q,
        "lower_bound": None if bound is None else to_str(bound),
        "lower_bound_ok": bound is None or Q >= bound,
        "sanity_bound_ok": sanity_bound_ok(census),
    }
