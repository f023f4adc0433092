"""Augmentation classification and knot reports."""

from cordaug.augment.classify import (
    augmentation_from_matrix,
    build_augmentations,
    classify_elliptic,
    epsilon_triple,
)
from cordaug.augment.rank import cord_matrix, numeric_rank
from cordaug.augment.report import build_report, crosscheck_rank2, su2_simple

__all__ = [
    "augmentation_from_matrix",
    "build_augmentations",
    "build_report",
    "classify_elliptic",
    "cord_matrix",
    "crosscheck_rank2",
    "epsilon_triple",
    "numeric_rank",
    "su2_simple",
]
