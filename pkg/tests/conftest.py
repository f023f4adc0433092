"""Shared pytest fixtures for cordaug tests."""

import os
from unittest.mock import patch

import numpy as np
import pytest

from cordaug.augment.classify import augmentation_from_matrix
from cordaug.core.models import Augmentation, DimFlag, KnotDiagram, KnotReport, RankCounts
from cordaug.diagram.braid import parse_braid
from cordaug.diagram.gauss import parse_gauss
from cordaug.reference import det_one_nonelliptic_matrix

TREFOIL_CODE = "1,-2,3,-1,2,-3"
FIGURE_EIGHT_CODE = "1,-2,4,-1,3,-4,2,-3"


@pytest.fixture(autouse=True)
def clean_environment():
    """Run every test without CORDAUG_* overrides from the caller's shell."""
    cleaned = {key: value for key, value in os.environ.items() if not key.startswith("CORDAUG_")}
    with patch.dict(os.environ, cleaned, clear=True):
        yield


@pytest.fixture
def trefoil() -> KnotDiagram:
    """Three-crossing trefoil from its Gauss code."""
    return parse_gauss(TREFOIL_CODE, "---", name="3_1")


@pytest.fixture
def trefoil_braid() -> KnotDiagram:
    """Trefoil as the closure of sigma_1^3."""
    return parse_braid([1, 1, 1], 2, name="3_1")


@pytest.fixture
def figure_eight() -> KnotDiagram:
    """Four-crossing figure-eight knot."""
    return parse_gauss(FIGURE_EIGHT_CODE, "+-+-", name="4_1")


def elliptic_matrix(n: int = 6, seed: int = 7) -> np.ndarray:
    """Cord matrix 2 U U^T of n random unit vectors in R^3 (real, rank 3, elliptic)."""
    rng = np.random.default_rng(seed)
    vectors = rng.normal(size=(n, 3))
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    return 2 * vectors @ vectors.T


def random_sl2c(rng: np.random.Generator, count: int) -> list[np.ndarray]:
    """Random complex 2x2 matrices scaled to determinant one."""
    matrices = []
    for _ in range(count):
        X = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        matrices.append(X / np.sqrt(np.linalg.det(X)))
    return matrices


@pytest.fixture
def elliptic_aug() -> Augmentation:
    """Synthetic real elliptic rank-3 augmentation on six arcs."""
    return augmentation_from_matrix(elliptic_matrix())


@pytest.fixture
def det_one_aug() -> Augmentation:
    """Real non-elliptic rank-3 augmentation of the determinant-one example."""
    return augmentation_from_matrix(det_one_nonelliptic_matrix())


@pytest.fixture
def trefoil_rank2() -> Augmentation:
    """The rank-2 (dihedral) augmentation of the trefoil."""
    return augmentation_from_matrix(
        np.array([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], dtype=float)
    )


@pytest.fixture
def sample_report() -> KnotReport:
    """Create a sample zero-dimensional KnotReport."""
    return KnotReport(
        name="8_19",
        det=3,
        counts=RankCounts(rank1=1, rank2=1, rank3_elliptic_real=1),
        su2_simple=False,
        dim_flag=DimFlag.ZERO_DIMENSIONAL,
        metabelian_check=True,
        core_vars=3,
    )


@pytest.fixture
def sl2c():
    """Factory for random SL2C matrices: sl2c(seed, count)."""

    def factory(seed: int, count: int) -> list[np.ndarray]:
        return random_sl2c(np.random.default_rng(seed), count)

    return factory
