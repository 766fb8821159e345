"""Incidences between Π = D² and the labeled curves Γ = {γ_{X,V} : X, V ∈ D}."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .census import DistanceCensus, Quadruple, build_census, enumerate_equal_pairs, pair_count_Q
from .curvefam import (
    CurvePoly,
    build_curve,
    coincidence_groups,
    known_shared_components,
    overlap_audit,
)
from .errors import InvariantViolation
from .exactmath import to_str
from .frame import AnchorFrame, Configuration, FrameError

DEFAULT_MAX_KAPPA = 40


@dataclass(frozen=True)
class IncidenceInstance:
    census: DistanceCensus
    frame: AnchorFrame
    Pi: tuple
    Gamma: tuple[CurvePoly, ...]
    incident_quadruples: tuple[Quadruple, ...]

    @property
    def I(self) -> int:  # noqa: E743
        return len(self.incident_quadruples)

    @property
    def kappa(self) -> int:
        return self.census.kappa


def _incidences_for_X(frame: AnchorFrame, D: tuple, X) -> list[Quadruple]:
    """All (X, Y, U, V) with (Y, U) on γ_{X,V}, for one X."""
    ys = [Y for Y in D if X - (Fraction(Y - X, 4) - 1) ** 2 >= 0]
    if not ys:
        return []
    out = []
    for V in D:
        us = [U for U in D if V - (Fraction(V - U, 4) + 1) ** 2 >= 0]
        if not us:
            continue
        H = build_curve(frame, X, V).canonical
        for Y in ys:
            h = H.at_first(Y)
            for U in us:
                if h(U) == 0:
                    out.append(Quadruple(X, Y, U, V))
    return out


def _count_chunk(args):
    frame, D, xs = args
    out = []
    for X in xs:
        out.extend(_incidences_for_X(frame, D, X))
    return out


def build_and_count(
    config: Configuration,
    *,
    collinear_diagnostics: bool = False,
    max_kappa: int | None = DEFAULT_MAX_KAPPA,
    workers: int = 1,
) -> IncidenceInstance:
    """Brute-force exact membership over D⁴.

    The work is split by X; results are merged and sorted, so the outcome
    does not depend on ``workers``.
    """
    frame = config.frame
    if frame.collinear and not collinear_diagnostics:
        raise FrameError("collinear frame: enable collinear diagnostics to proceed")
    census = build_census(config)
    D = census.D
    if max_kappa is not None and census.kappa > max_kappa:
        raise ValueError(f"kappa = {census.kappa} exceeds the cap {max_kappa}")
    tasks = [(frame, D, D[k::max(workers, 1)]) for k in range(max(workers, 1))]
    if workers > 1 and len(D) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_chunk, tasks))
    else:
        parts = [_count_chunk(t) for t in tasks]
    quads = sorted(q for part in parts for q in part)
    return IncidenceInstance(
        census=census,
        frame=frame,
        Pi=tuple((Y, U) for Y in D for U in D),
        Gamma=tuple(build_curve(frame, X, V) for X in D for V in D),
        incident_quadruples=tuple(quads),
    )


def verify_chain(
    instance: IncidenceInstance, census: DistanceCensus | None = None, *, strict: bool = True
) -> dict:
    """Check 2Q <= 4I, the pair-count lower bound and quadruple containment.

    I/κ^{8/3} is reported for comparison with the asymptotic bound and is
    never asserted.
    """
    census = census or instance.census
    if census.D != instance.census.D:
        raise ValueError("census does not belong to this instance")
    Q, bound = pair_count_Q(census)
    I = instance.I  # noqa: E741
    incident = set(instance.incident_quadruples)
    pairs = enumerate_equal_pairs(census)
    missing = [(ij, quad) for ij, quad in pairs if quad not in incident]
    checks = {
        "two_Q_le_four_I": 2 * Q <= 4 * I,
        "Q_ge_lower_bound": bound is None or Q >= bound,
        "pairs_are_incidences": not missing,
    }
    kappa = census.kappa
    report = {
        "kappa": kappa,
        "n": census.n,
        "I": I,
        "Q": Q,
        "lower_bound": None if bound is None else to_str(bound),
        "chain_checks": checks,
        "ratio_I_over_kappa_8_3": (I / kappa ** (8 / 3)) if kappa else None,
        "ok": all(checks.values()),
    }
    if missing:
        report["counterexamples"] = [
            {"pair": list(ij), "quadruple": [to_str(v) for v in quad]} for ij, quad in missing[:20]
        ]
    if strict and not report["ok"]:
        raise InvariantViolation("incidence chain violated", report)
    return report


def multiplicity_report(instance: IncidenceInstance, *, strict: bool = True) -> dict:
    """Coincidence-group histogram and shared-factor containment counts.

    For b != 0 every group and containing set must have size <= 4, except
    for components listed by ``known_shared_components`` which are reported
    separately.
    """
    curves = list(instance.Gamma)
    groups = coincidence_groups(curves)
    hist = Counter(len(g) for g in groups)
    shared = overlap_audit(curves)
    known = set(known_shared_components(instance.frame))
    regular = [s for s in shared if s.factor not in known]
    exceptional = [s for s in shared if s.factor in known]
    max_group = max(hist, default=0)
    max_shared = max((len(s.labels) for s in regular), default=0)
    report = {
        "group_size_histogram": {str(k): hist[k] for k in sorted(hist)},
        "distinct_curves": len(groups),
        "max_group_size": max_group,
        "shared_factor_containment": [len(s.labels) for s in regular],
        "max_shared_containment": max_shared,
        "known_exceptions": [
            {"factor_degrees": list(s.factor.degrees), "containing": len(s.labels)}
            for s in exceptional
        ],
        "prop1_ok": instance.frame.collinear or (max_group <= 4 and max_shared <= 4),
    }
    if strict and not report["prop1_ok"]:
        bad = [s for s in regular if len(s.labels) > 4]
        report["counterexamples"] = [
            {"labels": [[to_str(x), to_str(v)] for x, v in s.labels], "factor": repr(s.factor)}
            for s in bad
        ] + [
            [[to_str(x), to_str(v)] for x, v in g] for g in groups if len(g) > 4
        ]
        raise InvariantViolation("curve multiplicity above four", report)
    return report
