"""Exact-arithmetic laboratory for distinct distances from three points."""

__version__ = "0.1.0"
