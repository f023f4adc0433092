"""Tests for augmentation classification."""

import numpy as np
import pytest

from cordaug.augment.classify import (
    augmentation_from_matrix,
    build_augmentations,
    classify_elliptic,
    epsilon_triple,
    find_witness,
)
from cordaug.augment.rank import cord_matrix
from cordaug.core.exceptions import NotApplicableError
from cordaug.core.models import Augmentation, SolutionPoint


class TestClassify:
    """Tests for elliptic classification."""

    def test_epsilon_triple_trivial(self) -> None:
        """Test that the trivial augmentation has commutator trace 2."""
        aug = Augmentation(n=3, values=[2, 2, 2])
        assert epsilon_triple(aug, 1, 2, 3) == 2

    def test_elliptic(self, elliptic_aug: Augmentation) -> None:
        """Test that 2 U U^T data is real, rank 3 and elliptic."""
        assert elliptic_aug.rank == 3
        assert elliptic_aug.is_real
        assert elliptic_aug.is_elliptic is True
        assert elliptic_aug.witness_triple is None

    def test_non_elliptic_witness(self, det_one_aug: Augmentation) -> None:
        """Test the witness triple of the ten-arc example."""
        assert det_one_aug.rank == 3
        assert det_one_aug.is_elliptic is False
        assert det_one_aug.witness_triple == (2, 8, 1)
        assert abs(det_one_aug.value(2, 8)) > 2
        assert epsilon_triple(det_one_aug, 2, 8, 1).real > 2

    def test_no_witness_for_elliptic(self, elliptic_aug: Augmentation) -> None:
        """Test that elliptic points have no witness."""
        assert find_witness(elliptic_aug) is None

    def test_rank_two_not_applicable(self, trefoil_rank2: Augmentation) -> None:
        """Test that classification refuses rank-2 points."""
        assert trefoil_rank2.rank == 2
        assert trefoil_rank2.is_elliptic is None
        with pytest.raises(NotApplicableError):
            classify_elliptic(trefoil_rank2)

    def test_complex_point(self) -> None:
        """Test that points with imaginary parts are non-real."""
        aug = augmentation_from_matrix(np.array([[2, 1j], [1j, 2]]))
        assert not aug.is_real
        assert aug.values == [1j]

    def test_ambiguous_rank_flagged(self) -> None:
        """Test that rank ambiguity keeps the SVD rank and sets the flag."""
        v = 2 - 1e-6
        aug = augmentation_from_matrix(np.array([[2, v], [v, 2]]))
        assert aug.rank_ambiguous
        assert aug.rank == 2

    def test_residual_carried(self) -> None:
        """Test that certification data is kept on the augmentation."""
        aug = augmentation_from_matrix(np.full((2, 2), 2.0), 1e-12, True)
        assert aug.residual_norm == 1e-12
        assert aug.multiplicity_flag


class TestBuildAugmentations:
    """Tests for build_augmentations."""

    def test_index_order(self) -> None:
        """Test that rank 1 sorts before rank 2 regardless of input order."""
        points = [
            SolutionPoint(coordinates=[-1], values=[-1, -1, -1], residual_norm=0.0),
            SolutionPoint(coordinates=[2], values=[2, 2, 2], residual_norm=0.0),
        ]
        augmentations = build_augmentations(3, points)
        assert [aug.rank for aug in augmentations] == [1, 2]
        assert augmentations[0].values == [2, 2, 2]

    def test_single_arc(self) -> None:
        """Test that one-arc diagrams give the empty augmentation."""
        points = [SolutionPoint(coordinates=[], values=[], residual_norm=0.0)]
        augmentations = build_augmentations(1, points)
        assert len(augmentations) == 1
        assert augmentations[0].values == []
        assert augmentations[0].rank == 1


def _hyperbolic_matrix(n: int = 7, seed: int = 3) -> np.ndarray:
    """2 <u_r, u_s> for unit spacelike vectors of signature (2, 1) (real, rank 3)."""
    rng = np.random.default_rng(seed)
    heights = np.concatenate([[1.0, -1.0], rng.normal(scale=0.8, size=n - 2)])
    angles = np.concatenate([[0.0, 0.0], rng.uniform(0, 2 * np.pi, size=n - 2)])
    vectors = np.column_stack(
        [np.cosh(heights) * np.cos(angles), np.cosh(heights) * np.sin(angles), np.sinh(heights)]
    )
    return 2 * vectors @ np.diag([1.0, 1.0, -1.0]) @ vectors.T


def _valid_witness(aug: Augmentation, witness: tuple[int, int, int]) -> bool:
    i, j, k = witness
    return abs(aug.value(i, j).real) > 2 and epsilon_triple(aug, i, j, k).real > 2


@pytest.fixture
def hyperbolic_aug() -> Augmentation:
    """Synthetic real non-elliptic rank-3 augmentation on seven arcs."""
    return augmentation_from_matrix(_hyperbolic_matrix())


class TestRelabeling:
    """Classification does not depend on how the arcs are numbered."""

    @pytest.mark.parametrize("fixture", ["elliptic_aug", "det_one_aug", "hyperbolic_aug"])
    def test_permuted_arcs(self, fixture, request) -> None:
        """Test the verdict and witness validity under random arc permutations."""
        aug = request.getfixturevalue(fixture)
        matrix = cord_matrix(aug).real
        rng = np.random.default_rng(17)
        for _ in range(10):
            order = rng.permutation(aug.n)
            permuted = augmentation_from_matrix(matrix[np.ix_(order, order)])
            assert permuted.rank == 3
            assert classify_elliptic(permuted) == aug.is_elliptic
            if aug.is_elliptic:
                assert permuted.witness_triple is None
                continue
            assert permuted.witness_triple is not None
            assert _valid_witness(permuted, permuted.witness_triple)
            original = tuple(int(order[label - 1]) + 1 for label in permuted.witness_triple)
            assert _valid_witness(aug, original)


class TestRealityDichotomy:
    """Real rank-3 points are either elliptic or carry an SL2R witness."""

    def test_elliptic_is_positive_semidefinite(self, elliptic_aug) -> None:
        """Test that elliptic cord matrices have no negative eigenvalue."""
        eigenvalues = np.linalg.eigvalsh(cord_matrix(elliptic_aug).real)
        assert eigenvalues.min() > -1e-9
        assert find_witness(elliptic_aug) is None

    @pytest.mark.parametrize("seed", [3, 5, 8, 13])
    def test_hyperbolic_has_witness(self, seed) -> None:
        """Test that signature (2, 1) data is non-elliptic with a valid witness."""
        aug = augmentation_from_matrix(_hyperbolic_matrix(seed=seed))
        eigenvalues = np.linalg.eigvalsh(cord_matrix(aug).real)
        assert aug.rank == 3
        assert aug.is_real
        assert int(np.sum(eigenvalues < -1e-9)) == 1
        assert aug.is_elliptic is False
        assert aug.witness_triple == (1, 2, 3)
        assert _valid_witness(aug, aug.witness_triple)

    def test_det_one_example_signature(self, det_one_aug) -> None:
        """Test that the non-elliptic ten-arc example has one negative direction."""
        eigenvalues = np.linalg.eigvalsh(cord_matrix(det_one_aug).real)
        assert int(np.sum(eigenvalues < -1e-9)) == 1
        assert det_one_aug.witness_triple is not None
