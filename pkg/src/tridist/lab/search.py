"""Simulated annealing over integer point sets for configurations with few distances."""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from ..census import build_census, pair_count_Q
from ..errors import InvariantViolation
from ..exactmath import parse
from ..frame import AnchorFrame, Configuration, FrameError, PlanePoint, distance_triple


@dataclass(frozen=True)
class SearchSpec:
    n: int
    m: int
    frame: AnchorFrame = AnchorFrame(0, 1)
    t0: float = 2.0
    cooling: float = 0.999
    steps: int = 4000
    seed: int = 0
    restarts: int = 1
    workers: int = 1

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be nonnegative")
        if not (self.t0 > 0 and 0 < self.cooling < 1 and self.steps > 0 and self.restarts > 0):
            raise ValueError("schedule parameters must be positive with cooling in (0, 1)")
        if self.frame.collinear:
            raise FrameError("search requires a noncollinear frame")

    @classmethod
    def from_json(cls, data: dict) -> "SearchSpec":
        frame = AnchorFrame(*(parse(c) for c in data.get("frame", ["0", "1"])))
        keys = ("t0", "cooling", "steps", "seed", "restarts", "workers")
        kw = {k: data[k] for k in keys if k in data}
        return cls(n=int(data["n"]), m=int(data["m"]), frame=frame, **kw)


def lattice(spec: SearchSpec) -> list[PlanePoint]:
    """Box points with |x|, |y| <= m, anchors removed."""
    anchors = set(spec.frame.anchors)
    r = range(-spec.m, spec.m + 1)
    pts = [PlanePoint(x, y) for x in r for y in r if PlanePoint(x, y) not in anchors]
    if len(pts) < spec.n:
        raise ValueError(f"box of half-width {spec.m} has only {len(pts)} admissible points")
    return pts


class _State:
    """Multiset of distances and p3-fibers, updated one point at a time."""

    def __init__(self, triples: list):
        self.dist = Counter()
        self.fiber = Counter()
        self.Q = 0
        for t in triples:
            self.add(t)

    @property
    def kappa(self) -> int:
        return len(self.dist)

    def add(self, t):
        for v in t:
            self.dist[v] += 1
        self.Q += self.fiber[t[2]]
        self.fiber[t[2]] += 1

    def remove(self, t):
        for v in t:
            self.dist[v] -= 1
            if not self.dist[v]:
                del self.dist[v]
        self.fiber[t[2]] -= 1
        self.Q -= self.fiber[t[2]]
        if not self.fiber[t[2]]:
            del self.fiber[t[2]]


def _energy(kappa: int, Q: int, n: int) -> float:
    # κ first; Q breaks ties, lower preferred
    return kappa + Q / (n * n + 1)


def _anneal(args):
    spec, index = args
    rng = random.Random(f"{spec.seed}:{index}")
    pts = lattice(spec)
    triples = {p: tuple(distance_triple(spec.frame, p)) for p in pts}
    current = rng.sample(range(len(pts)), spec.n)
    free = sorted(set(range(len(pts))) - set(current))
    state = _State([triples[pts[i]] for i in current])
    energy = _energy(state.kappa, state.Q, spec.n)
    best = (state.kappa, state.Q, sorted(current))
    trace = [{"step": 0, "kappa": state.kappa, "Q": state.Q}]
    temp = spec.t0
    for step in range(1, spec.steps + 1):
        if spec.n == 0 or not free:
            break
        slot = rng.randrange(spec.n)
        k = rng.randrange(len(free))
        old, new = current[slot], free[k]
        state.remove(triples[pts[old]])
        state.add(triples[pts[new]])
        cand = _energy(state.kappa, state.Q, spec.n)
        if cand <= energy or rng.random() < math.exp((energy - cand) / temp):
            current[slot], free[k] = new, old
            energy = cand
            if (state.kappa, state.Q) < best[:2]:
                best = (state.kappa, state.Q, sorted(current))
                trace.append({"step": step, "kappa": state.kappa, "Q": state.Q})
        else:
            state.remove(triples[pts[new]])
            state.add(triples[pts[old]])
        temp *= spec.cooling
    return best[0], best[1], [pts[i] for i in best[2]], trace


def search_min_kappa(spec: SearchSpec) -> tuple[Configuration, int, list[dict]]:
    """Best configuration over all restarts, its κ and the best-so-far trace."""
    tasks = [(spec, k) for k in range(spec.restarts)]
    if spec.workers > 1 and spec.restarts > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            runs = list(pool.map(_anneal, tasks))
    else:
        runs = [_anneal(t) for t in tasks]
    k = min(range(len(runs)), key=lambda i: (runs[i][0], runs[i][1], i))
    kappa, Q, points, _ = runs[k]
    trace = [dict(row, restart=i) for i, run in enumerate(runs) for row in run[3]]
    config = Configuration(spec.frame, tuple(points))
    census = build_census(config)
    if census.kappa != kappa or pair_count_Q(census)[0] != Q:
        raise InvariantViolation("search bookkeeping disagrees with the census", {"kappa": kappa, "census": census.kappa})
    if census.n > 2 * census.kappa**2:
        raise InvariantViolation("n > 2κ²", {"n": census.n, "kappa": census.kappa})
    return config, kappa, trace


def exhaustive_min_kappa(spec: SearchSpec) -> tuple[int, int]:
    """(min κ, number of optimal sets) over every n-subset of the box; tiny cases only."""
    pts = lattice(spec)
    triples = [tuple(distance_triple(spec.frame, p)) for p in pts]
    best, count = None, 0
    for combo in combinations(range(len(pts)), spec.n):
        kappa = len({v for i in combo for v in triples[i]})
        if best is None or kappa < best:
            best, count = kappa, 1
        elif kappa == best:
            count += 1
    return (0 if best is None else best), count
