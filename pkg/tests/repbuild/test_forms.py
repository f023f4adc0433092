"""Tests for the SU(2) and SL2R normal forms."""

from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest

from cordaug.augment.classify import augmentation_from_matrix, classify_elliptic
from cordaug.augment.rank import cord_matrix
from cordaug.core.exceptions import NotEllipticError, NoWitnessError
from cordaug.core.models import RepForm
from cordaug.diagram.table import lookup
from cordaug.pipeline import analyze_diagram
from cordaug.reference import det_one_nonelliptic_matrix
from cordaug.repbuild.construction import (
    build_A,
    build_representation,
    build_T,
    relation_residuals,
)
from cordaug.repbuild.forms import build_sl2r, conjugate_su2
from cordaug.repbuild.fricke import commutator_trace, trace_gram


def _with_T(aug):
    rep = build_A(aug)
    return rep.model_copy(update={"T": build_T(rep)})


class TestConjugateSU2:
    """Tests for conjugate_su2."""

    def test_unitary_meridians(self, elliptic_aug) -> None:
        """Test that conjugated meridian images are unitary with determinant one."""
        rep = conjugate_su2(_with_T(elliptic_aug), elliptic_aug)
        assert rep.form == RepForm.SU2
        assert len(rep.meridians) == elliptic_aug.n
        for U in rep.meridians:
            assert np.allclose(U @ U.conj().T, np.eye(2), atol=1e-8)
            assert np.linalg.det(U) == pytest.approx(1, abs=1e-9)
        assert rep.verification.unitarity < 1e-8
        assert rep.verification.trace < 1e-8

    def test_non_elliptic_rejected(self, det_one_aug) -> None:
        """Test that non-elliptic points cannot be made unitary."""
        with pytest.raises(NotEllipticError):
            conjugate_su2(_with_T(det_one_aug), det_one_aug)

    def test_needs_construction_data(self, elliptic_aug) -> None:
        """Test that a bare A-set without T is rejected."""
        rep = build_A(elliptic_aug)
        with pytest.raises(NotEllipticError):
            conjugate_su2(rep, elliptic_aug)


class TestBuildSL2R:
    """Tests for build_sl2r preconditions."""

    def test_elliptic_has_no_witness(self, elliptic_aug, trefoil) -> None:
        """Test that elliptic points are refused."""
        with pytest.raises(NoWitnessError):
            build_sl2r(elliptic_aug, trefoil)

    def test_rank_two_refused(self, trefoil_rank2, trefoil) -> None:
        """Test that rank-2 points are refused."""
        with pytest.raises(NoWitnessError):
            build_sl2r(trefoil_rank2, trefoil)


@lru_cache(maxsize=None)
def _rank3_points(name: str):
    diagram = lookup(name)
    analysis = analyze_diagram(diagram)
    return diagram, [aug for aug in analysis.augmentations if aug.rank == 3 and aug.is_real]


@pytest.mark.slow
class TestTableRepresentations:
    """Representations built from augmentations that the solver found."""

    def test_lift_residuals(self) -> None:
        """Test Wirtinger and trace residuals of the elliptic point of 8_19."""
        diagram, points = _rank3_points("8_19")
        assert len(points) == 1
        rep = build_representation(points[0], diagram)
        assert rep.form == RepForm.GENERIC_SL2C
        assert rep.verification.relation < 1e-9
        assert rep.verification.trace < 1e-9
        assert max(relation_residuals(rep.meridians, diagram)) < 1e-9

    def test_su2_of_table_knot(self) -> None:
        """Test unitarity on 8_19 and that the SU(2) traces classify as elliptic again."""
        diagram, points = _rank3_points("8_19")
        aug = points[0]
        rep = conjugate_su2(build_representation(aug, diagram), aug)
        assert rep.verification.unitarity < 1e-8
        for U in rep.meridians:
            assert np.allclose(U @ U.conj().T, np.eye(2), atol=1e-8)
        again = augmentation_from_matrix(trace_gram(rep.A))
        assert again.rank == 3
        assert again.is_elliptic is True
        assert classify_elliptic(aug) is True

    def test_elliptic_points_of_det_one_example(self) -> None:
        """Test that all four elliptic points of 10_153 conjugate into SU(2)."""
        diagram, points = _rank3_points("10_153")
        elliptic = [aug for aug in points if aug.is_elliptic]
        assert len(elliptic) == 4
        for aug in elliptic:
            rep = conjugate_su2(build_representation(aug, diagram), aug)
            assert rep.verification.unitarity < 1e-8
            assert rep.verification.relation < 1e-9

    def test_sl2r_of_det_one_example(self) -> None:
        """Test real matrices and a non-abelian image for the non-elliptic point of 10_153."""
        diagram, points = _rank3_points("10_153")
        (aug,) = [aug for aug in points if not aug.is_elliptic]
        assert np.allclose(cord_matrix(aug).real, det_one_nonelliptic_matrix(), atol=1e-8)

        rep = build_sl2r(aug, diagram)
        assert rep.form == RepForm.SL2R
        assert rep.verification.imaginary < 1e-9
        assert rep.verification.relation < 1e-9
        assert rep.relabeling[:3] == list(aug.witness_triple)
        assert all(np.all(A.imag == 0) for A in rep.A)
        gaps = [
            abs(commutator_trace(rep.A[r], rep.A[s]) - 2)
            for r, s in combinations(range(len(rep.A)), 2)
        ]
        assert max(gaps) > 1e-3
