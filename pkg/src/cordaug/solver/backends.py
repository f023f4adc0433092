"""Registered solver backends, tried in priority order by the solve engine."""

import logging
from functools import reduce
from itertools import product

import numpy as np

from cordaug.core.exceptions import NumericalBreakdownError
from cordaug.core.interfaces import SolverBackend
from cordaug.core.models import SolverConfig
from cordaug.core.registry import register
from cordaug.polysys.system import PolySystem
from cordaug.solver.newton import CANDIDATE, gauss_newton_batch, multistart
from cordaug.solver.pool import PointPool
from cordaug.solver.resultants import eliminant
from cordaug.solver.univariate import poly_roots

logger = logging.getLogger(__name__)

MAX_RESULTANT_VARS = 4
MAX_PRODUCT_CANDIDATES = 20000


@register("univariate", SolverBackend)
class UnivariateBackend(SolverBackend):
    """One core variable: roots of the gcd of the reduced generators."""

    priority = 10

    @property
    def exhaustive(self) -> bool:
        return True

    def applicable(self, system: PolySystem, config: SolverConfig) -> bool:
        return len(system.core_vars) == 1

    def collect(self, system: PolySystem, pool: PointPool, config: SolverConfig) -> int:
        reduced = system.reduced
        if not reduced:
            logger.info("No residual constraint on %s: positive-dimensional", system.name)
            pool.positive_dimensional = True
            return 0
        common = reduce(lambda a, b: a.gcd(b), reduced).sqf_part()
        roots = poly_roots(common, digits=config.precision_digits)
        for root in roots:
            pool.add([root], conjugate=False)
        return len(roots)


@register("resultant", SolverBackend)
class ResultantBackend(SolverBackend):
    """Two to four core variables of low degree: eliminants per variable, then matching."""

    priority = 20

    @property
    def exhaustive(self) -> bool:
        return True

    def applicable(self, system: PolySystem, config: SolverConfig) -> bool:
        m = len(system.core_vars)
        if not 2 <= m <= MAX_RESULTANT_VARS:
            return False
        bound = system.predicted_residual_degree ** (2 ** (m - 1))
        return bound <= config.resultant_degree_limit

    def collect(self, system: PolySystem, pool: PointPool, config: SolverConfig) -> int:
        reduced = system.reduced
        if not reduced:
            pool.positive_dimensional = True
            return 0
        coordinate_roots = []
        for target in range(len(system.core_vars)):
            coeffs = eliminant(reduced, target)
            if coeffs is None:
                raise NumericalBreakdownError(
                    f"resultants vanish for {system.core_vars[target].name}", knot=system.name
                )
            coordinate_roots.append(poly_roots(coeffs, digits=config.precision_digits))
        total = int(np.prod([len(roots) for roots in coordinate_roots]))
        if total > MAX_PRODUCT_CANDIDATES:
            raise NumericalBreakdownError(
                f"{total} coordinate combinations exceed the matching limit", knot=system.name
            )
        if total == 0:
            return 0

        candidates = np.array(list(product(*coordinate_roots)), dtype=complex)
        residuals, _ = pool.numeric.residuals_batch(candidates)
        scale = 1.0 + np.max(np.abs(candidates), axis=1) ** system.predicted_residual_degree
        close = np.linalg.norm(residuals, axis=1) < 1e-4 * scale
        if not close.any():
            return total
        polished, norms = gauss_newton_batch(
            pool.numeric.residuals_batch, candidates[close], config.newton_max_iter
        )
        for row in np.argsort(norms):
            if norms[row] < CANDIDATE:
                pool.add(polished[row], conjugate=False)
        return total


@register("newton", SolverBackend)
class NewtonBackend(SolverBackend):
    """Seeded multi-start damped Gauss-Newton on the reduced system."""

    priority = 30

    def applicable(self, system: PolySystem, config: SolverConfig) -> bool:
        return len(system.core_vars) >= 1

    def collect(self, system: PolySystem, pool: PointPool, config: SolverConfig) -> int:
        pool.add(np.full(len(system.core_vars), 2.0 + 0j))
        return multistart(pool.numeric, pool, config)
