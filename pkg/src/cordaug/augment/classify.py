"""Rank, reality and elliptic classification of augmentations."""

import logging
from itertools import combinations
from typing import Sequence

import numpy as np

from cordaug.augment.rank import cord_matrix, numeric_rank, svd_rank
from cordaug.core.exceptions import NotApplicableError, RankAmbiguousError
from cordaug.core.models import Augmentation, SolutionPoint

logger = logging.getLogger(__name__)

ELLIPTIC_TOL = 1e-9
REAL_TOL = 1e-8
SORT_DIGITS = 8


def epsilon_triple(aug: Augmentation, r: int, s: int, t: int) -> complex:
    """Commutator trace eps(r,s,t) = e_rs^2 + e_rt^2 + e_st^2 - e_rs e_rt e_st - 2."""
    rs, rt, st = aug.value(r, s), aug.value(r, t), aug.value(s, t)
    return rs * rs + rt * rt + st * st - rs * rt * st - 2


def _in_interval(value: complex) -> bool:
    return abs(value.imag) <= ELLIPTIC_TOL and -2 - ELLIPTIC_TOL <= value.real <= 2 + ELLIPTIC_TOL


def find_witness(aug: Augmentation) -> tuple[int, int, int] | None:
    """First (i, j, k) in lexicographic pair order with |eps_ij| > 2 and eps(i,j,k) > 2."""
    labels = range(1, aug.n + 1)
    for i, j in combinations(labels, 2):
        if abs(aug.value(i, j).real) <= 2 + ELLIPTIC_TOL:
            continue
        for k in labels:
            if k in (i, j):
                continue
            if epsilon_triple(aug, i, j, k).real > 2 + ELLIPTIC_TOL:
                return (i, j, k)
    return None


def classify_elliptic(aug: Augmentation) -> bool:
    """Decide whether a real rank-3 augmentation is elliptic.

    Elliptic means every eps_rs and every eps(r,s,t) lies in [-2, 2], with
    values within 1e-9 of the boundary counted inside. The verdict is stored on
    ``aug``; a non-elliptic point also gets its witness triple when one exists.

    Raises:
        NotApplicableError: rank is not 3 or the point is not real
    """
    if aug.rank != 3 or not aug.is_real:
        raise NotApplicableError(
            f"elliptic classification needs a real rank-3 point (rank {aug.rank}, "
            f"real={aug.is_real})"
        )
    labels = range(1, aug.n + 1)
    elliptic = all(_in_interval(aug.value(r, s)) for r, s in combinations(labels, 2)) and all(
        _in_interval(epsilon_triple(aug, r, s, t)) for r, s, t in combinations(labels, 3)
    )
    aug.is_elliptic = elliptic
    aug.witness_triple = None if elliptic else find_witness(aug)
    return elliptic


def augmentation_from_matrix(
    matrix: np.ndarray | Sequence[Sequence[complex]],
    residual_norm: float = 0.0,
    multiplicity_flag: bool = False,
) -> Augmentation:
    """Build and classify an augmentation from its cord matrix.

    Only the strict upper triangle is read. Rank ambiguity is logged and
    flagged on the result, which then carries the singular-value rank.
    """
    matrix = np.asarray(matrix, dtype=complex)
    n = matrix.shape[0]
    values = matrix[np.triu_indices(n, k=1)]
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    is_real = bool(np.all(np.abs(values.imag) <= REAL_TOL * scale))
    if is_real:
        values = values.real + 0j

    full = np.full((n, n), 2.0 + 0.0j)
    full[np.triu_indices(n, k=1)] = values
    full = np.triu(full) + np.triu(full, k=1).T
    ambiguous = False
    try:
        rank = numeric_rank(full)
    except RankAmbiguousError as e:
        logger.warning("%s; keeping the SVD rank", e)
        rank, ambiguous = svd_rank(full), True

    aug = Augmentation(
        n=n,
        values=[complex(v) for v in values],
        rank=max(rank, 1),
        is_real=is_real,
        residual_norm=residual_norm,
        multiplicity_flag=multiplicity_flag,
        rank_ambiguous=ambiguous,
    )
    if aug.rank == 3 and aug.is_real:
        classify_elliptic(aug)
    return aug


def _sort_key(aug: Augmentation) -> tuple:
    rounded = tuple((round(v.real, SORT_DIGITS), round(v.imag, SORT_DIGITS)) for v in aug.values)
    return (aug.rank, not aug.is_real, rounded)


def build_augmentations(n: int, points: Sequence[SolutionPoint]) -> list[Augmentation]:
    """Classify every certified point and return them in index order.

    Index order sorts by rank, then real before non-real, then by the rounded
    values in (r, s) order; this ordering defines the augmentation index.
    """
    augmentations = []
    for point in points:
        if n < 2:
            augmentations.append(Augmentation(n=n, values=[], residual_norm=point.residual_norm))
            continue
        partial = Augmentation(n=n, values=list(point.values))
        augmentations.append(
            augmentation_from_matrix(
                cord_matrix(partial),
                residual_norm=point.residual_norm,
                multiplicity_flag=point.multiplicity_flag,
            )
        )
    return sorted(augmentations, key=_sort_key)
