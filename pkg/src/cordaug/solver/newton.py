"""Damped Gauss-Newton: multi-start search in double precision, refinement in mpmath."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Callable, NamedTuple, Sequence

import mpmath
import numpy as np

from cordaug.core.exceptions import DivergedError, SingularJacobianError, UnstabilizedError
from cordaug.core.models import SolverConfig
from cordaug.polysys.numeric import NumericSystem

if TYPE_CHECKING:
    from cordaug.solver.pool import PointPool

logger = logging.getLogger(__name__)

ResidualFn = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]

ARMIJO_C = 1e-4
MAX_BACKTRACKS = 12
CONVERGED = 1e-12
CANDIDATE = 1e-6
SINGULAR_RATIO = 1e-8


class Refined(NamedTuple):
    """Core point after extended-precision refinement."""

    core: list[complex]
    values: list
    residual: float


def _squared_norms(residuals: np.ndarray) -> np.ndarray:
    return np.sum(np.abs(residuals) ** 2, axis=1)


def _newton_steps(jacobian: np.ndarray, residuals: np.ndarray) -> np.ndarray:
    try:
        pseudo = np.linalg.pinv(jacobian)
        return -np.einsum("bij,bj->bi", pseudo, residuals)
    except np.linalg.LinAlgError:
        steps = np.zeros((jacobian.shape[0], jacobian.shape[2]), dtype=complex)
        for row in range(jacobian.shape[0]):
            try:
                steps[row] = -np.linalg.lstsq(jacobian[row], residuals[row], rcond=None)[0]
            except np.linalg.LinAlgError:
                steps[row] = np.nan
        return steps


def gauss_newton_batch(
    fn: ResidualFn, starts: np.ndarray, max_iter: int
) -> tuple[np.ndarray, np.ndarray]:
    """Run damped Gauss-Newton from every row of ``starts``.

    Steps are least-squares solutions of J dz = -r; each is halved until the squared
    residual drops by the Armijo factor. Rows whose line search fails or that leave
    the finite range are frozen.

    Returns:
        Final points and their residual norms (inf for rows that broke down)
    """
    Z = np.array(starts, dtype=complex)
    with np.errstate(all="ignore"):
        residuals, jacobian = fn(Z)
        f = _squared_norms(residuals)
        alive = np.isfinite(f) & np.isfinite(jacobian).all(axis=(1, 2))
        for _ in range(max_iter):
            active = np.nonzero(alive & (f > CONVERGED**2))[0]
            if active.size == 0:
                break
            steps = _newton_steps(jacobian[active], residuals[active])
            finite = np.isfinite(steps).all(axis=1)
            alive[active[~finite]] = False
            active, steps = active[finite], steps[finite]
            t = np.ones(active.size)
            accepted = np.zeros(active.size, dtype=bool)
            for _ in range(MAX_BACKTRACKS):
                todo = np.nonzero(~accepted)[0]
                if todo.size == 0:
                    break
                rows = active[todo]
                trial = Z[rows] + t[todo, None] * steps[todo]
                trial_r, trial_j = fn(trial)
                trial_f = _squared_norms(trial_r)
                ok = np.isfinite(trial_f) & (trial_f <= (1 - ARMIJO_C * t[todo]) * f[rows])
                good = todo[ok]
                Z[active[good]] = trial[ok]
                residuals[active[good]] = trial_r[ok]
                jacobian[active[good]] = trial_j[ok]
                f[active[good]] = trial_f[ok]
                accepted[good] = True
                t[todo[~ok]] *= 0.5
            alive[active[~accepted]] = False
    norms = np.sqrt(f)
    norms[~np.isfinite(norms)] = np.inf
    return Z, norms


def is_singular(jacobian: np.ndarray, m: int) -> bool:
    """Rank test on one Jacobian: fewer than m singular values above the ratio."""
    if jacobian.size == 0:
        return m > 0
    singular_values = np.linalg.svd(jacobian, compute_uv=False)
    if len(singular_values) < m or singular_values[0] == 0:
        return True
    return bool(singular_values[m - 1] <= SINGULAR_RATIO * singular_values[0])


def refine(
    numeric: NumericSystem, point: Sequence[complex], digits: int, max_iter: int
) -> Refined:
    """Gauss-Newton on the residual generators at ``digits`` decimal digits.

    Args:
        numeric: Evaluator of the reduced system
        point: Core point with residual below about 1e-4
        digits: Working precision
        max_iter: Iteration cap

    Returns:
        Refined core point, all variable values (mpmath) and final residual

    Raises:
        SingularJacobianError: Normal equations are singular at the point
        DivergedError: Residual did not fall below 10^(-0.8 * digits)
    """
    with mpmath.workdps(digits):
        target = mpmath.mpf(10) ** (-0.8 * digits)
        z = [mpmath.mpc(c) for c in point]
        norm = mpmath.mpf("inf")
        for _ in range(max_iter):
            residuals, jacobian = numeric.residuals_mp(z)
            norm = max((abs(r) for r in residuals), default=mpmath.mpf(0))
            if norm < target:
                break
            J = mpmath.matrix(jacobian)
            JH = J.H
            try:
                step = mpmath.lu_solve(JH * J, -(JH * mpmath.matrix(residuals)))
            except ZeroDivisionError as e:
                raise SingularJacobianError(
                    "normal equations are singular", details={"residual": float(norm)}
                ) from e
            z = [z[i] + step[i] for i in range(len(z))]
        else:
            residuals, _ = numeric.residuals_mp(z)
            norm = max((abs(r) for r in residuals), default=mpmath.mpf(0))
            if norm >= target:
                raise DivergedError(
                    f"refinement stalled at residual {float(norm):.3e}", residual=float(norm)
                )
        values = numeric.values_mp(z)
        return Refined([complex(c) for c in z], values, float(norm))


def _random_starts(rng: np.random.Generator, size: int, m: int, box: float) -> np.ndarray:
    real = rng.uniform(-box, box, size=(size, m))
    imag = rng.uniform(-box, box, size=(size, m))
    return real + 1j * imag


def sliced(numeric: NumericSystem, normal: np.ndarray, offset: complex) -> ResidualFn:
    """Residual function with the affine equation normal . z = offset appended."""

    def fn(Z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        residuals, jacobian = numeric.residuals_batch(Z)
        extra = (Z @ normal - offset)[:, None]
        extra_j = np.broadcast_to(normal, (Z.shape[0], 1, normal.size))
        return np.concatenate([residuals, extra], axis=1), np.concatenate(
            [jacobian, extra_j], axis=1
        )

    return fn


def slice_finds_new_points(
    numeric: NumericSystem,
    pool: PointPool,
    config: SolverConfig,
    rng: np.random.Generator,
    batches: int = 4,
) -> bool:
    """Search a random affine slice for certified points missing from the pool."""
    m = numeric.m
    normal = rng.normal(size=m) + 1j * rng.normal(size=m)
    offset = complex(rng.normal(), rng.normal())
    fn = sliced(numeric, normal, offset)
    for _ in range(batches):
        starts = _random_starts(rng, config.batch_per_var * m, m, config.box)
        Z, norms = gauss_newton_batch(fn, starts, config.newton_max_iter)
        for row in np.nonzero(norms < CANDIDATE)[0]:
            if pool.contains(Z[row]):
                continue
            values = numeric.values_batch(Z[row][None, :])[0]
            if numeric.full_residual(values) < config.certify_tol:
                logger.debug("Slice produced an off-list point at %s", Z[row])
                return True
    return False


def multistart(numeric: NumericSystem, pool: PointPool, config: SolverConfig) -> int:
    """Seeded multi-start search until the point count stabilizes.

    Batches hold batch_per_var * m starts drawn from the box |Re|, |Im| <= box. The
    search stops once at least 200 * m starts were used and stable_batches
    consecutive batches added nothing, or when a slice test confirms a
    positive-dimensional component.

    Returns:
        Number of starts consumed

    Raises:
        UnstabilizedError: Start budget exhausted before stabilizing
    """
    m = numeric.m
    rng = np.random.default_rng(config.seed)
    batch = config.batch_per_var * m
    minimum = 200 * m
    starts = quiet = 0
    slice_tested_at = 0
    while True:
        if starts >= config.max_starts:
            raise UnstabilizedError(
                f"point count still growing after {starts} starts",
                starts=starts,
                found=len(pool.points),
            )
        size = min(batch, config.max_starts - starts)
        Z, norms = gauss_newton_batch(
            numeric.residuals_batch,
            _random_starts(rng, size, m, config.box),
            config.newton_max_iter,
        )
        starts += size
        new = sum(1 for row in np.argsort(norms) if norms[row] < CANDIDATE and pool.add(Z[row]))
        quiet = 0 if new else quiet + 1
        logger.debug("Batch of %d starts: %d new, %d total", size, new, len(pool.points))

        singular = pool.singular_count
        if singular >= 3 and singular > slice_tested_at:
            slice_tested_at = singular
            if slice_finds_new_points(numeric, pool, config, rng):
                pool.positive_dimensional = True
                return starts
        if starts >= minimum and quiet >= config.stable_batches:
            return starts
