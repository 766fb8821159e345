"""The curve family γ_{X,V}: construction, membership, witnesses, recovery, audits."""

from .audit import (
    LineReport,
    SharedFactor,
    coincidence_groups,
    collinear_constant,
    collinear_diagnostics,
    intersection_guard,
    known_shared_components,
    overlap_audit,
    radical,
)
from .curve import (
    CurveError,
    CurvePoly,
    DualCurve,
    build_curve,
    build_dual_curve,
    dual_membership,
    is_ghost,
    membership,
    on_algebraic_curve,
    within_bounds,
)
from .recovery import (
    CriticalPoint,
    RecoveryCandidate,
    critical_points,
    recover_from_extremal,
    recovery_report,
    v_quadratic,
)
from .witness import WitnessPair, reconstruct_witnesses, witness_candidates, witness_membership

__all__ = [
    "CriticalPoint",
    "CurveError",
    "CurvePoly",
    "DualCurve",
    "LineReport",
    "RecoveryCandidate",
    "SharedFactor",
    "WitnessPair",
    "build_curve",
    "build_dual_curve",
    "coincidence_groups",
    "collinear_constant",
    "collinear_diagnostics",
    "critical_points",
    "dual_membership",
    "intersection_guard",
    "is_ghost",
    "known_shared_components",
    "membership",
    "on_algebraic_curve",
    "overlap_audit",
    "radical",
    "reconstruct_witnesses",
    "recover_from_extremal",
    "recovery_report",
    "v_quadratic",
    "witness_candidates",
    "witness_membership",
    "within_bounds",
]
