"""Experiments, search, regression harness and the command line."""

from .generators import collinear_diagnostic, grid, random_frame, random_rational
from .scaling import ExperimentSpec, loglog_slope, rows_to_csv, run_scaling
from .search import SearchSpec, exhaustive_min_kappa, search_min_kappa

__all__ = [
    "ExperimentSpec",
    "SearchSpec",
    "collinear_diagnostic",
    "exhaustive_min_kappa",
    "grid",
    "loglog_slope",
    "random_frame",
    "random_rational",
    "rows_to_csv",
    "run_scaling",
    "search_min_kappa",
]
