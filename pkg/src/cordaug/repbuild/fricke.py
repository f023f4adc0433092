"""Fricke discriminant and trace-matrix utilities for SL2C triples."""

from typing import NamedTuple, Sequence

import numpy as np


class FrickeValues(NamedTuple):
    """P, Q and discriminant of a matrix triple, plus the trace-quadratic check."""

    P: complex
    Q: complex
    discriminant: complex
    quadratic_residual: float


def _tr(matrix: np.ndarray) -> complex:
    return complex(np.trace(matrix))


def fricke(X1: np.ndarray, X2: np.ndarray, X3: np.ndarray) -> FrickeValues:
    """Fricke polynomials of three unit-determinant matrices.

    P = x1 y23 + x2 y31 + x3 y12 - x1 x2 x3 and
    Q = sum xi^2 + sum yij^2 + y12 y31 y23 - x1 x2 y12 - x3 x1 y31 - x2 x3 y23 - 4,
    with xi = tr Xi and yij = tr(Xi Xj). The traces of X1X2X3 and X1X3X2 are the
    roots of z^2 - Pz + Q; quadratic_residual is the larger of the two residuals.
    """
    X1, X2, X3 = (np.asarray(X, dtype=complex) for X in (X1, X2, X3))
    x1, x2, x3 = _tr(X1), _tr(X2), _tr(X3)
    y12, y31, y23 = _tr(X1 @ X2), _tr(X3 @ X1), _tr(X2 @ X3)
    P = x1 * y23 + x2 * y31 + x3 * y12 - x1 * x2 * x3
    Q = (
        x1 * x1
        + x2 * x2
        + x3 * x3
        + y12 * y12
        + y31 * y31
        + y23 * y23
        + y12 * y31 * y23
        - x1 * x2 * y12
        - x3 * x1 * y31
        - x2 * x3 * y23
        - 4
    )
    z123, z132 = _tr(X1 @ X2 @ X3), _tr(X1 @ X3 @ X2)
    residual = max(abs(z * z - P * z + Q) for z in (z123, z132))
    return FrickeValues(P, Q, P * P - 4 * Q, float(residual))


def trace_gram(matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix [tr(Xi Xj^-1)] of a list of SL2C matrices."""
    inverses = [np.linalg.inv(np.asarray(X, dtype=complex)) for X in matrices]
    return np.array(
        [[_tr(np.asarray(Xi, dtype=complex) @ Yj) for Yj in inverses] for Xi in matrices]
    )


def mixed_trace_determinant(matrices: Sequence[np.ndarray]) -> complex:
    """4x4 determinant with rows X1..X4 and columns X1, X2, X3, X5 of the trace Gram matrix.

    It is a multiple of det[tr(Xi Xj^-1)] over i, j <= 4.
    """
    if len(matrices) != 5:
        raise ValueError(f"expected five matrices, got {len(matrices)}")
    gram = trace_gram(matrices)
    return complex(np.linalg.det(gram[np.ix_([0, 1, 2, 3], [0, 1, 2, 4])]))


def commutator_trace(X: np.ndarray, Y: np.ndarray) -> complex:
    """tr(X Y X^-1 Y^-1)."""
    X, Y = np.asarray(X, dtype=complex), np.asarray(Y, dtype=complex)
    return _tr(X @ Y @ np.linalg.inv(X) @ np.linalg.inv(Y))
