"""Tests for the explicit A-matrix and T construction."""

from functools import lru_cache

import numpy as np
import pytest

from cordaug.augment.rank import cord_matrix
from cordaug.core.exceptions import NoNondegenerateMinorError, NoSolutionError
from cordaug.core.models import RepresentationSet
from cordaug.diagram.table import lookup
from cordaug.pipeline import analyze_diagram
from cordaug.repbuild.construction import (
    alpha,
    build_A,
    build_T,
    choose_relabeling,
    closed_form_T,
    magic_residual,
    principal_sqrt,
)
from cordaug.repbuild.fricke import trace_gram

WITNESS_ORDER = [2, 8, 1, 3, 4, 5, 6, 7, 9, 10]


class TestPrincipalSqrt:
    """Tests for principal_sqrt."""

    def test_branch(self) -> None:
        """Test the non-negative real part branch and the cut."""
        assert principal_sqrt(4) == 2
        assert principal_sqrt(-4) == 2j
        assert principal_sqrt(complex(-4, -0.0)) == 2j
        root = principal_sqrt(3 - 4j)
        assert root.real > 0
        assert root * root == pytest.approx(3 - 4j)


class TestBuildA:
    """Tests for build_A."""

    def test_traces_match_det_one_example(self, det_one_aug) -> None:
        """Test tr(A_r A_s^-1) = eps_rs on the ten-arc example."""
        rep = build_A(det_one_aug)
        assert len(rep.A) == 10
        assert rep.verification.trace < 1e-8
        assert sorted(rep.relabeling) == list(range(1, 11))
        assert np.allclose(rep.A[rep.relabeling[0] - 1], np.eye(2))

    def test_determinants(self, elliptic_aug) -> None:
        """Test that every A-matrix has determinant one."""
        rep = build_A(elliptic_aug)
        for A in rep.A:
            assert np.linalg.det(A) == pytest.approx(1, abs=1e-9)

    def test_witness_order_is_real(self, det_one_aug) -> None:
        """Test that putting the witness first gives real matrices."""
        rep = build_A(det_one_aug, WITNESS_ORDER)
        assert rep.relabeling == WITNESS_ORDER
        assert max(float(np.max(np.abs(A.imag))) for A in rep.A) < 1e-9
        assert np.allclose(trace_gram(rep.A), cord_matrix(det_one_aug).real, atol=1e-8)

    def test_b_discriminant_vanishes(self, det_one_aug) -> None:
        """Test that the det(A_l) = 1 quadratic has a double root at rank 3."""
        rep = build_A(det_one_aug)
        assert max(abs(v) for v in rep.aux.b_discriminant) < 1e-7
        assert magic_residual(rep, det_one_aug) < 1e-8

    def test_alpha_matches_aux(self, elliptic_aug) -> None:
        """Test that alpha() agrees with the construction's alpha."""
        rep = build_A(elliptic_aug)
        assert alpha(elliptic_aug, tuple(rep.relabeling[:3])) == pytest.approx(rep.aux.alpha)

    def test_rank_two_rejected(self, trefoil_rank2) -> None:
        """Test that rank-2 points have no nondegenerate minor."""
        with pytest.raises(NoNondegenerateMinorError):
            build_A(trefoil_rank2)

    def test_relabeling_starts_with_minor(self, elliptic_aug) -> None:
        """Test that the chosen order is a permutation."""
        order = choose_relabeling(elliptic_aug)
        assert sorted(order) == list(range(1, elliptic_aug.n + 1))


class TestBuildT:
    """Tests for build_T and closed_form_T."""

    def test_closed_form(self) -> None:
        """Test trace zero and determinant one."""
        T = closed_form_T(0.7 + 0.2j)
        assert np.trace(T) == 0
        assert np.linalg.det(T) == pytest.approx(1)

    def test_square_relation(self, elliptic_aug) -> None:
        """Test (T A_i)^2 = -Id and agreement with the closed form."""
        rep = build_A(elliptic_aug)
        T = build_T(rep)
        for A in rep.A:
            M = T @ A
            assert np.allclose(M @ M, -np.eye(2), atol=1e-9)
        assert np.allclose(T, closed_form_T(rep.aux.alpha), atol=1e-9)

    def test_scalar_set(self) -> None:
        """Test that identities alone leave T undetermined."""
        rep = RepresentationSet(A=[np.eye(2), np.eye(2)])
        with pytest.raises(NoSolutionError):
            build_T(rep)


@lru_cache(maxsize=None)
def _rank3_points(name: str):
    diagram = lookup(name)
    analysis = analyze_diagram(diagram)
    return diagram, [aug for aug in analysis.augmentations if aug.rank == 3]


@pytest.mark.slow
class TestMagicIdentity:
    """The identity behind SU(2) conjugation on every rank-3 point of a solve."""

    @pytest.mark.parametrize("name", ["8_19", "9_40", "10_153"])
    def test_all_rank_three_points(self, name) -> None:
        """Test the magic residual on real and non-real rank-3 augmentations."""
        _, points = _rank3_points(name)
        assert points
        for aug in points:
            rep = build_A(aug)
            scale = max(1.0, max(abs(v) for v in aug.values)) ** 4
            assert magic_residual(rep, aug) < 1e-8 * scale
