"""Tests for the solve stage."""

import os
from unittest.mock import patch

import numpy as np
import pytest

from cordaug.core.exceptions import DivergedError
from cordaug.core.models import DimFlag, SolutionPoint, SolutionSet, SolverConfig
from cordaug.diagram.gauss import parse_gauss
from cordaug.diagram.table import lookup
from cordaug.polysys.cords import build_cord_system
from cordaug.polysys.elimination import eliminate
from cordaug.polysys.numeric import NumericSystem
from cordaug.solver.engine import conjugation_closed, detect_positive_dim, solve_zero_dim
from cordaug.solver.newton import refine


def _solve(diagram, config=None):
    return solve_zero_dim(eliminate(build_cord_system(diagram)), config)


class TestSolveZeroDim:
    """Tests for solve_zero_dim."""

    def test_trefoil(self, trefoil) -> None:
        """Test the two points of the trefoil."""
        solutions = _solve(trefoil)
        assert solutions.dim_flag == DimFlag.ZERO_DIMENSIONAL
        assert solutions.backend == "univariate"
        assert len(solutions.points) == 2
        values = sorted(tuple(np.round(np.real(p.values), 9)) for p in solutions.points)
        assert values == [(-1.0, -1.0, -1.0), (2.0, 2.0, 2.0)]

    def test_certified_residuals(self, figure_eight) -> None:
        """Test that every point is certified on the full system."""
        config = SolverConfig()
        solutions = _solve(figure_eight, config)
        assert len(solutions.points) == 3
        assert all(p.residual_norm <= config.certify_tol for p in solutions.points)

    def test_settings_recorded(self, trefoil) -> None:
        """Test that seed and precision are carried on the solution set."""
        solutions = _solve(trefoil, SolverConfig(seed=5, precision_digits=30))
        assert solutions.seed == 5
        assert solutions.precision > 53

    def test_unknot_trivial(self) -> None:
        """Test that a system without variables has the single empty point."""
        solutions = _solve(parse_gauss("1,-1", "+"))
        assert solutions.backend == "trivial"
        assert solutions.dim_flag == DimFlag.ZERO_DIMENSIONAL
        assert len(solutions.points) == 1


class TestDimension:
    """Tests for dimension checks and conjugation symmetry."""

    def test_isolated_points(self, trefoil) -> None:
        """Test that regular isolated points are judged zero-dimensional."""
        system = eliminate(build_cord_system(trefoil))
        solutions = solve_zero_dim(system)
        assert detect_positive_dim(system, solutions) == DimFlag.ZERO_DIMENSIONAL

    def test_conjugation_closed(self, figure_eight) -> None:
        """Test that the point set is closed under complex conjugation."""
        assert conjugation_closed(_solve(figure_eight))

    def test_lone_complex_point_not_closed(self) -> None:
        """Test that a non-real point without its conjugate is detected."""
        point = SolutionPoint(coordinates=[1j], values=[1j, 2, 2], residual_norm=0.0)
        partner = SolutionPoint(coordinates=[-1j], values=[-1j, 2, 2], residual_norm=0.0)
        assert not conjugation_closed(SolutionSet(n=3, points=[point]))
        assert conjugation_closed(SolutionSet(n=3, points=[point, partner]))

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["8_19", "9_40", "10_153"])
    def test_table_solves_closed(self, name) -> None:
        """Test conjugation symmetry of the full solve of a table knot."""
        solutions = _solve(lookup(name))
        assert solutions.points
        assert conjugation_closed(solutions)


class TestNewton:
    """Tests for refinement and the multi-start backend."""

    def test_refine(self, trefoil) -> None:
        """Test that refinement converges to the nearby root."""
        numeric = NumericSystem(eliminate(build_cord_system(trefoil)))
        refined = refine(numeric, [2.001 + 0.001j], digits=50, max_iter=60)
        assert abs(refined.core[0] - 2) < 1e-30
        assert refined.residual < 1e-30
        assert len(refined.values) == 3

    def test_refine_diverged(self, trefoil) -> None:
        """Test that an exhausted iteration budget raises DivergedError."""
        numeric = NumericSystem(eliminate(build_cord_system(trefoil)))
        with pytest.raises(DivergedError):
            refine(numeric, [3.0], digits=50, max_iter=1)

    def test_forced_newton(self, trefoil) -> None:
        """Test that multi-start Newton finds the same two points."""
        with patch.dict(os.environ, {"CORDAUG_BACKEND": "newton"}):
            solutions = _solve(trefoil)
        assert solutions.backend == "newton"
        assert solutions.starts >= 200
        assert solutions.dim_flag == DimFlag.ZERO_DIMENSIONAL
        assert len(solutions.points) == 2
