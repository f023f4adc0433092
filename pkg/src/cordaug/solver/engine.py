"""Solve stage: run backends, assemble the solution set, judge its dimension."""

import logging

import numpy as np
from mpmath.libmp import dps_to_prec

from cordaug.core.exceptions import NumericalBreakdownError, UnstabilizedError, ZeroPolynomialError
from cordaug.core.models import DimFlag, SolutionPoint, SolutionSet, SolverConfig
from cordaug.core.registry import backends_by_priority
from cordaug.polysys.system import PolySystem
from cordaug.solver.newton import slice_finds_new_points
from cordaug.solver.pool import PointPool

logger = logging.getLogger(__name__)

SEPARATION = 1e-3


def _trivial_set(system: PolySystem, config: SolverConfig) -> SolutionSet:
    return SolutionSet(
        n=system.n,
        core_vars=[],
        points=[SolutionPoint(coordinates=[], values=[], residual_norm=0.0)],
        dim_flag=DimFlag.ZERO_DIMENSIONAL,
        seed=config.seed,
        precision=dps_to_prec(config.precision_digits),
        backend="trivial",
    )


def solve_zero_dim(system: PolySystem, config: SolverConfig | None = None) -> SolutionSet:
    """Find, refine and certify every isolated point of a reduced cord system.

    Backends are tried in priority order (univariate, resultant, newton unless
    CORDAUG_BACKEND forces one); a backend that breaks down hands over to the next.

    Args:
        system: Reduced system from eliminate
        config: Solver settings (defaults when omitted)

    Returns:
        SolutionSet with points in canonical order and a dimension flag

    Raises:
        NumericalBreakdownError: No backend could handle the system
    """
    config = config or SolverConfig()
    if not system.variables:
        return _trivial_set(system, config)

    pool = PointPool(system, config)
    dim_flag = DimFlag.UNDETERMINED
    backend_name = ""
    starts = 0
    exhaustive = False
    for backend in backends_by_priority():
        if not backend.applicable(system, config):
            continue
        try:
            starts = backend.collect(system, pool, config)
        except (NumericalBreakdownError, ZeroPolynomialError) as e:
            logger.info("Backend %s gave up on %s: %s", backend.name, system.name, e)
            continue
        except UnstabilizedError as e:
            logger.warning("%s: %s", system.name or "<unnamed>", e)
            backend_name, starts = backend.name, e.starts or 0
            break
        backend_name = backend.name
        exhaustive = backend.exhaustive
        dim_flag = (
            DimFlag.POSITIVE_DIMENSIONAL if pool.positive_dimensional else DimFlag.ZERO_DIMENSIONAL
        )
        break
    else:
        raise NumericalBreakdownError("no solver backend could handle the system", knot=system.name)

    solutions = SolutionSet(
        n=system.n,
        core_vars=list(system.core_vars),
        points=pool.sorted_points(),
        dim_flag=dim_flag,
        seed=config.seed,
        precision=dps_to_prec(config.precision_digits),
        starts=starts,
        backend=backend_name,
    )
    if dim_flag == DimFlag.ZERO_DIMENSIONAL and not exhaustive:
        solutions.dim_flag = detect_positive_dim(system, solutions, config)
    logger.info(
        "Solved %s with %s: %d points, %s",
        system.name or "<unnamed>",
        backend_name,
        len(solutions.points),
        solutions.dim_flag.value,
    )
    return solutions


def _separated(points: list[SolutionPoint]) -> int:
    chosen: list[np.ndarray] = []
    for point in points:
        core = np.asarray(point.coordinates, dtype=complex)
        if all(np.max(np.abs(core - other)) > SEPARATION for other in chosen):
            chosen.append(core)
    return len(chosen)


def detect_positive_dim(
    system: PolySystem, solutions: SolutionSet, config: SolverConfig | None = None
) -> DimFlag:
    """Judge the dimension of the solved variety.

    Positive-dimensional when at least three well-separated certified points have
    a rank-deficient Jacobian and a random affine slice yields certified points
    that are not on the isolated list. Otherwise zero-dimensional if the count
    stabilized, else undetermined.
    """
    config = config or SolverConfig()
    if not system.variables:
        return DimFlag.ZERO_DIMENSIONAL
    if solutions.dim_flag == DimFlag.POSITIVE_DIMENSIONAL:
        return DimFlag.POSITIVE_DIMENSIONAL
    singular = [point for point in solutions.points if point.multiplicity_flag]
    if _separated(singular) >= 3:
        pool = PointPool(system, config)
        pool.seed(solutions.points)
        rng = np.random.default_rng(config.seed + 1)
        if slice_finds_new_points(pool.numeric, pool, config, rng):
            return DimFlag.POSITIVE_DIMENSIONAL
    if solutions.dim_flag == DimFlag.UNDETERMINED:
        return DimFlag.UNDETERMINED
    return DimFlag.ZERO_DIMENSIONAL


def conjugation_closed(solutions: SolutionSet, tol: float | None = None) -> bool:
    """Every point's complex conjugate is within tol (max norm) of some point."""
    tol = tol if tol is not None else SolverConfig().dedup_tol
    values = [np.asarray(point.values, dtype=complex) for point in solutions.points]
    return all(
        any(np.max(np.abs(np.conj(v) - w), initial=0.0) < tol for w in values) for v in values
    )
