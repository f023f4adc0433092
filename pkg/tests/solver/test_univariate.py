"""Tests for univariate root finding."""

from fractions import Fraction
from math import cos, pi

import pytest

from cordaug.core.exceptions import ZeroPolynomialError
from cordaug.reference import ROOTS_F, ROOTS_G, twisted_polynomials
from cordaug.solver.univariate import poly_roots, polish_root


class TestPolyRoots:
    """Tests for poly_roots."""

    def test_heptagon_roots(self) -> None:
        """Test that x^3 + x^2 - 2x - 1 has roots 2cos(2 pi k / 7)."""
        roots = sorted(r.real for r in poly_roots(ROOTS_F))
        expected = sorted(2 * cos(2 * pi * k / 7) for k in (1, 2, 3))
        assert roots == pytest.approx(expected, abs=1e-12)

    def test_shifted_roots(self) -> None:
        """Test that the second cubic's roots are the first's shifted by one."""
        first = sorted(r.real for r in poly_roots(ROOTS_F))
        second = sorted(r.real for r in poly_roots(ROOTS_G))
        assert second == pytest.approx([x + 1 for x in first], abs=1e-12)

    def test_degree_and_order(self) -> None:
        """Test root count and (real, imag) ordering."""
        roots = poly_roots([1, 0, 1])
        assert len(roots) == 2
        assert roots[0].imag < roots[1].imag
        assert all(abs(r * r + 1) < 1e-12 for r in roots)

    def test_constant(self) -> None:
        """Test that nonzero constants have no roots."""
        assert poly_roots([Fraction(3)]) == []

    def test_leading_zeros(self) -> None:
        """Test that leading zero coefficients are dropped."""
        assert len(poly_roots([0, 0, 1, -2])) == 1

    def test_zero_polynomial(self) -> None:
        """Test that the zero polynomial raises ZeroPolynomialError."""
        with pytest.raises(ZeroPolynomialError):
            poly_roots([0, 0])

    def test_twisted_minus_one(self) -> None:
        """Test four real roots in [-2, 2] and six non-real roots."""
        roots = poly_roots(twisted_polynomials()["-1"])
        real = [r.real for r in roots if abs(r.imag) < 1e-9]
        assert len(roots) == 10
        assert len(real) == 4
        assert all(-2 <= x <= 2 for x in real)

    def test_twisted_one(self) -> None:
        """Test that every root is real and the largest exceeds 2."""
        roots = poly_roots(twisted_polynomials()["1"])
        assert all(abs(r.imag) < 1e-9 for r in roots)
        assert max(r.real for r in roots) > 2


class TestPolishRoot:
    """Tests for polish_root."""

    def test_polish_improves_estimate(self) -> None:
        """Test Newton polishing of a perturbed root of x^2 - 2."""
        coeffs = [Fraction(1), Fraction(0), Fraction(-2)]
        root = polish_root(coeffs, 1.4)
        assert abs(root - 2**0.5) < 1e-15
