"""Certified point collection shared by the solver backends."""

from __future__ import annotations

import logging
from typing import Sequence

import mpmath
import numpy as np

from cordaug.core.exceptions import DivergedError, SingularJacobianError
from cordaug.core.models import SolutionPoint, SolverConfig
from cordaug.polysys.numeric import NumericSystem
from cordaug.polysys.system import PolySystem
from cordaug.solver.newton import is_singular, refine

logger = logging.getLogger(__name__)

REAL_TOL = 1e-12


class PointPool:
    """Refines, certifies and deduplicates candidate core points.

    A candidate is kept when, after refinement, the full original system
    evaluates below certify_tol at its back-substituted values and it is farther
    than dedup_tol (max norm on the core) from every kept point. The complex
    conjugate of each kept point is offered as a candidate too.
    """

    def __init__(self, system: PolySystem, config: SolverConfig):
        self.system = system
        self.config = config
        self.numeric = NumericSystem(system)
        self.points: list[SolutionPoint] = []
        self._cores: list[np.ndarray] = []
        self.positive_dimensional = False
        self.rejected = 0

    @property
    def singular_count(self) -> int:
        """Kept points whose Jacobian is rank-deficient."""
        return sum(1 for point in self.points if point.multiplicity_flag)

    def contains(self, core: Sequence[complex]) -> bool:
        """True if a kept point lies within dedup_tol of ``core``."""
        candidate = np.asarray(core, dtype=complex)
        return any(
            np.max(np.abs(kept - candidate), initial=0.0) < self.config.dedup_tol
            for kept in self._cores
        )

    def seed(self, points: Sequence[SolutionPoint]) -> None:
        """Register already certified points without re-checking them."""
        for point in points:
            self.points.append(point)
            self._cores.append(np.asarray(point.coordinates, dtype=complex))

    def add(self, core: Sequence[complex], conjugate: bool = True) -> bool:
        """Offer a candidate; returns True if it (or its conjugate) became a new point."""
        candidate = np.asarray(core, dtype=complex)
        if self.contains(candidate):
            return False
        accepted = self._certify(candidate)
        if accepted is None:
            self.rejected += 1
            return False
        kept = np.asarray(accepted.coordinates, dtype=complex)
        self.points.append(accepted)
        self._cores.append(kept)
        if conjugate and np.max(np.abs(kept.imag), initial=0.0) > REAL_TOL:
            self.add(np.conj(kept), conjugate=False)
        return True

    def _certify(self, candidate: np.ndarray) -> SolutionPoint | None:
        numeric = self.numeric
        m = numeric.m
        singular = False
        if m:
            _, jacobian = numeric.residuals_batch(candidate[None, :])
            singular = is_singular(jacobian[0], m)

        digits = self.config.precision_digits
        if singular:
            core = [complex(c) for c in candidate]
            with mpmath.workdps(digits):
                values = numeric.values_mp(core)
        else:
            try:
                refined = refine(numeric, candidate, digits, self.config.newton_max_iter)
            except SingularJacobianError:
                singular = True
                core = [complex(c) for c in candidate]
                with mpmath.workdps(digits):
                    values = numeric.values_mp(core)
            except DivergedError as e:
                logger.debug("Candidate %s rejected: %s", candidate, e)
                return None
            else:
                core, values = refined.core, refined.values
        if self.contains(core):
            return None

        with mpmath.workdps(digits):
            residual = numeric.full_residual_mp(values)
        if not np.isfinite(residual) or residual >= self.config.certify_tol:
            logger.debug("Candidate failed certification (residual %.3e)", residual)
            return None
        return SolutionPoint(
            coordinates=core,
            values=[complex(v) for v in values],
            residual_norm=residual,
            multiplicity_flag=singular,
        )

    def sorted_points(self) -> list[SolutionPoint]:
        """Kept points in canonical order (by rounded real then imaginary parts)."""

        def key(point: SolutionPoint) -> tuple:
            return tuple((round(v.real, 8), round(v.imag, 8)) for v in point.values)

        return sorted(self.points, key=key)
