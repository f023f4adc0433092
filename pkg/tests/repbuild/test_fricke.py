"""Tests for Fricke polynomials and trace matrices."""

import numpy as np
import pytest

from cordaug.repbuild.fricke import commutator_trace, fricke, mixed_trace_determinant, trace_gram

SEEDS = 1000


def _norm_product(matrices) -> float:
    return float(np.prod([max(1.0, np.linalg.norm(X)) for X in matrices]))


class TestFricke:
    """Tests for fricke."""

    def test_trace_quadratic(self, sl2c) -> None:
        """Test that tr(X1X2X3) and tr(X1X3X2) solve z^2 - Pz + Q over 1000 triples."""
        for seed in range(SEEDS):
            matrices = sl2c(seed, 3)
            values = fricke(*matrices)
            scale = _norm_product(matrices) ** 2
            assert values.quadratic_residual <= 1e-9 * scale, seed

    def test_discriminant(self, sl2c) -> None:
        """Test that the discriminant is the squared difference of the two traces."""
        X1, X2, X3 = sl2c(11, 3)
        values = fricke(X1, X2, X3)
        difference = np.trace(X1 @ X2 @ X3) - np.trace(X1 @ X3 @ X2)
        scale = max(1.0, abs(values.P) ** 2)
        assert values.discriminant == pytest.approx(difference**2, rel=1e-6, abs=1e-9 * scale)

    def test_identity_triple(self) -> None:
        """Test P = Q = 4 on three identities."""
        identity = np.eye(2)
        values = fricke(identity, identity, identity)
        assert values.P == pytest.approx(4)
        assert values.Q == pytest.approx(4)
        assert values.discriminant == pytest.approx(0)


class TestTraceGram:
    """Tests for trace_gram and its determinants."""

    def test_diagonal_and_symmetry(self, sl2c) -> None:
        """Test tr(Xi Xi^-1) = 2 and symmetry of the trace matrix."""
        gram = trace_gram(sl2c(5, 4))
        assert np.allclose(np.diag(gram), 2)
        assert np.allclose(gram, gram.T)

    def test_five_matrices_degenerate(self, sl2c) -> None:
        """Test det[tr(Xi Xj^-1)] = 0 for five matrices over 1000 seeds."""
        for seed in range(SEEDS):
            matrices = sl2c(seed, 5)
            gram = trace_gram(matrices)
            # Hadamard bound on the determinant
            scale = float(np.prod(np.linalg.norm(gram, axis=1)))
            assert abs(np.linalg.det(gram)) <= 1e-8 * scale, seed

    def test_mixed_determinant_squared(self, sl2c) -> None:
        """Test that the mixed minor squared is the product of the two principal minors."""
        matrices = sl2c(9, 5)
        gram = trace_gram(matrices)
        first = np.linalg.det(gram[np.ix_([0, 1, 2, 3], [0, 1, 2, 3])])
        second = np.linalg.det(gram[np.ix_([0, 1, 2, 4], [0, 1, 2, 4])])
        mixed = mixed_trace_determinant(matrices)
        scale = float(np.max(np.abs(gram))) ** 8
        assert mixed**2 == pytest.approx(first * second, rel=1e-6, abs=1e-10 * scale)

    def test_mixed_needs_five(self, sl2c) -> None:
        """Test that exactly five matrices are required."""
        with pytest.raises(ValueError):
            mixed_trace_determinant(sl2c(1, 4))

    def test_commutator_trace(self, sl2c) -> None:
        """Test commuting and generic pairs."""
        assert commutator_trace(np.diag([2, 0.5]), np.diag([3, 1 / 3])) == pytest.approx(2)
        X, Y = sl2c(4, 2)
        x, y, xy = np.trace(X), np.trace(Y), np.trace(X @ Y)
        expected = x * x + y * y + xy * xy - x * y * xy - 2
        assert commutator_trace(X, Y) == pytest.approx(expected, rel=1e-8)
