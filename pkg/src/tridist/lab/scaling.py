"""Scaling experiments: κ, Q and I against n, written as CSV."""

from __future__ import annotations

import csv
import io
import math
import random
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..census import build_census, pair_count_Q, sanity_bound_ok
from ..errors import InvariantViolation
from ..exactmath import parse, to_str
from ..frame import AnchorFrame, FrameError
from ..incidence import build_and_count
from .generators import FAMILIES, generate

CSV_COLUMNS = ("size", "n", "kappa", "Q", "I", "lower_bound", "ratio_I_over_kappa_8_3")


@dataclass(frozen=True)
class ExperimentSpec:
    """``sizes`` are lattice sides m for the grid families and point counts n otherwise."""

    family: str
    sizes: tuple[int, ...]
    frame: AnchorFrame = AnchorFrame(0, 1)
    seed: int = 0
    max_kappa: int = 25
    collinear_diagnostics: bool = False
    workers: int = 1
    outputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if any(int(s) <= 0 for s in self.sizes):
            raise ValueError("sizes must be positive")
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if self.family == "collinear-diagnostic" and not self.collinear_diagnostics:
            raise FrameError("collinear family requires collinear diagnostics")
        if self.frame.collinear and not self.collinear_diagnostics:
            raise FrameError("collinear frame: enable collinear diagnostics to proceed")

    @classmethod
    def from_json(cls, data: dict) -> "ExperimentSpec":
        frame = AnchorFrame(*(parse(c) for c in data.get("frame", ["0", "1"])))
        return cls(
            family=data["family"],
            sizes=tuple(data["sizes"]),
            frame=frame,
            seed=int(data.get("seed", 0)),
            max_kappa=int(data.get("max_kappa", 25)),
            collinear_diagnostics=bool(data.get("collinear_diagnostics", False)),
            workers=int(data.get("workers", 1)),
            outputs=dict(data.get("outputs", {})),
        )


def _row(args) -> dict:
    spec, index = args
    size = spec.sizes[index]
    frame = spec.frame if spec.family != "collinear-diagnostic" else AnchorFrame(spec.frame.a, 0)
    rng = random.Random(f"{spec.seed}:{index}")
    config = generate(spec.family, size, frame, rng)
    census = build_census(config)
    if not sanity_bound_ok(census):
        raise InvariantViolation("n > 2κ²", {"size": size, "n": census.n, "kappa": census.kappa})
    Q, bound = pair_count_Q(census)
    I = None  # noqa: E741
    if census.kappa <= spec.max_kappa:
        I = build_and_count(config, collinear_diagnostics=spec.collinear_diagnostics).I  # noqa: E741
    ratio = None if I is None or census.kappa == 0 else I / census.kappa ** (8 / 3)
    return {
        "size": size,
        "n": census.n,
        "kappa": census.kappa,
        "Q": Q,
        "I": I,
        "lower_bound": None if bound is None else to_str(bound),
        "ratio_I_over_kappa_8_3": ratio,
    }


def loglog_slope(rows: list[dict]) -> float | None:
    pts = [(math.log(r["n"]), math.log(r["kappa"])) for r in rows if r["n"] > 0 and r["kappa"] > 0]
    if len({x for x, _ in pts}) < 2:
        return None
    return statistics.linear_regression([x for x, _ in pts], [y for _, y in pts]).slope


def run_scaling(spec: ExperimentSpec) -> tuple[list[dict], float | None]:
    """Rows in size order plus the least-squares slope of log κ against log n."""
    tasks = [(spec, k) for k in range(len(spec.sizes))]
    if spec.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            rows = list(pool.map(_row, tasks))
    else:
        rows = [_row(t) for t in tasks]
    return rows, loglog_slope(rows)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow([_cell(r[c]) for c in CSV_COLUMNS])
    return buf.getvalue()
