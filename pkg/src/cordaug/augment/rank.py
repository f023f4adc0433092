"""Cord matrices and their numerical rank."""

import logging
from itertools import combinations
from math import comb

import numpy as np

from cordaug.core.exceptions import RankAmbiguousError
from cordaug.core.models import Augmentation

logger = logging.getLogger(__name__)

RANK_TOL = 1e-8
MINOR_TOL = 1e-6
MAX_MINORS = 5000


def cord_matrix(aug: Augmentation) -> np.ndarray:
    """Symmetric n x n matrix with diagonal 2 and off-diagonal entries eps_rs."""
    n = aug.n
    matrix = np.full((n, n), 2.0 + 0.0j)
    iu = np.triu_indices(n, k=1)
    matrix[iu] = np.asarray(aug.values, dtype=complex)
    matrix[(iu[1], iu[0])] = matrix[iu]
    return matrix


def svd_rank(matrix: np.ndarray, tol: float = RANK_TOL) -> int:
    """Number of singular values above tol times the largest."""
    if matrix.size == 0:
        return 0
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > tol * singular_values[0]))


def _has_principal_minor(scaled: np.ndarray, size: int) -> bool:
    n = scaled.shape[0]
    if size == 0:
        return True
    if size > n:
        return False
    for rows in combinations(range(n), size):
        block = scaled[np.ix_(rows, rows)]
        if abs(np.linalg.det(block)) > MINOR_TOL:
            return True
    return False


def numeric_rank(matrix: np.ndarray, tol: float = RANK_TOL) -> int:
    """Rank of a square cord matrix, cross-validated by principal minors.

    The SVD count is accepted when, after scaling by the largest singular
    value, some principal minor of that size is nonzero and every principal
    minor one size larger vanishes.

    Raises:
        RankAmbiguousError: The two criteria disagree
    """
    matrix = np.asarray(matrix, dtype=complex)
    rank = svd_rank(matrix, tol)
    n = matrix.shape[0]
    if rank == 0 or comb(n, rank) + comb(n, min(rank + 1, n)) > MAX_MINORS:
        return rank

    scaled = matrix / np.linalg.norm(matrix, 2)
    lower = _has_principal_minor(scaled, rank)
    upper = _has_principal_minor(scaled, rank + 1)
    if lower and not upper:
        return rank
    minor_rank = rank + 1 if upper else rank - 1
    raise RankAmbiguousError(
        f"SVD gives rank {rank} but principal minors suggest {minor_rank}",
        svd_rank=rank,
        minor_rank=minor_rank,
    )
