"""Numerical solving of reduced cord systems."""

from cordaug.solver.engine import conjugation_closed, detect_positive_dim, solve_zero_dim
from cordaug.solver.univariate import poly_roots

__all__ = ["conjugation_closed", "detect_positive_dim", "poly_roots", "solve_zero_dim"]
