"""Knot determinant from the Wirtinger presentation."""

import logging

import sympy as sp

from cordaug.core.models import KnotDiagram
from cordaug.diagram.wirtinger import wirtinger

logger = logging.getLogger(__name__)


def alexander_matrix_at_minus_one(diagram: KnotDiagram) -> sp.Matrix:
    """Fox-calculus Alexander matrix evaluated at t = -1.

    Each crossing contributes a row with 2 at the over arc and -1 at both under
    arcs (entries add when labels coincide). The crossing sign drops out since
    t and 1/t agree at -1.
    """
    n = diagram.n
    matrix = sp.zeros(n, n)
    for row, relation in enumerate(wirtinger(diagram)):
        matrix[row, relation.i - 1] += 2
        matrix[row, relation.j - 1] -= 1
        matrix[row, relation.k - 1] -= 1
    return matrix


def reduced_alexander_matrix(diagram: KnotDiagram, row: int = -1, column: int = -1) -> sp.Matrix:
    """Alexander matrix at t = -1 with one row and one column deleted (0-based, -1 = last)."""
    matrix = alexander_matrix_at_minus_one(diagram)
    n = diagram.n
    row, column = row % n, column % n
    keep_rows = [r for r in range(n) if r != row]
    keep_cols = [c for c in range(n) if c != column]
    return matrix.extract(keep_rows, keep_cols)


def knot_determinant(diagram: KnotDiagram) -> int:
    """|Delta_K(-1)| by fraction-free Bareiss elimination (1 for the crossingless unknot)."""
    if diagram.n <= 1:
        return 1
    minor = reduced_alexander_matrix(diagram)
    det = abs(int(minor.det(method="bareiss")))
    logger.debug("Determinant of %s: %d", diagram.name or "<unnamed>", det)
    return det
