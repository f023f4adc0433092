"""Numeric evaluation of a reduced system on its core variables.

Values of eliminated variables are computed by running the rewriting steps rather
than by expanding their (possibly high-degree) images, which keeps evaluation well
conditioned. Jacobians with respect to the core variables come from forward-mode
propagation through the same steps. Two flavors: numpy batches in double precision
for multi-start Newton, and mpmath scalars for refinement and certification.
"""

from __future__ import annotations

from typing import Sequence

import mpmath
import numpy as np

from cordaug.polysys.polynomials import Term
from cordaug.polysys.system import PolySystem

_FloatTerm = tuple[complex, tuple[tuple[int, int], ...]]


def _float_terms(terms: Sequence[Term]) -> list[_FloatTerm]:
    return [(complex(term.coeff), term.factors) for term in terms]


class NumericSystem:
    """Evaluator of the rewriting program and residual generators of a system."""

    def __init__(self, system: PolySystem):
        self.system = system
        self.nvars = len(system.variables)
        self.core_indices = system.core_indices
        self.m = len(self.core_indices)
        self.steps = [
            (step.target, 1.0 / float(step.divisor), _float_terms(step.terms))
            for step in system.steps
        ]
        self.residual_terms = [
            _float_terms(system.generator_terms[i]) for i in system.residual_indices
        ]
        self.all_terms = [_float_terms(terms) for terms in system.generator_terms]
        self._mp_steps = [
            (step.target, step.divisor, list(step.terms)) for step in system.steps
        ]

    # =========================================================================
    # numpy batches
    # =========================================================================

    @staticmethod
    def _term_batch(
        term: _FloatTerm, values: np.ndarray, grads: np.ndarray | None
    ) -> tuple[np.ndarray, np.ndarray | None]:
        coeff, factors = term
        batch = values.shape[0]
        val = np.full(batch, coeff, dtype=complex)
        powers = [values[:, i] ** e for i, e in factors]
        for power in powers:
            val = val * power
        if grads is None:
            return val, None
        grad = np.zeros((batch, grads.shape[2]), dtype=complex)
        for position, (i, e) in enumerate(factors):
            partial = np.full(batch, coeff * e, dtype=complex) * values[:, i] ** (e - 1)
            for other, power in enumerate(powers):
                if other != position:
                    partial = partial * power
            grad += partial[:, None] * grads[:, i, :]
        return val, grad

    def _propagate(self, Z: np.ndarray, with_grad: bool) -> tuple[np.ndarray, np.ndarray | None]:
        batch = Z.shape[0]
        values = np.zeros((batch, self.nvars), dtype=complex)
        grads = np.zeros((batch, self.nvars, self.m), dtype=complex) if with_grad else None
        for position, index in enumerate(self.core_indices):
            values[:, index] = Z[:, position]
            if grads is not None:
                grads[:, index, position] = 1.0
        for target, inverse, terms in self.steps:
            total = np.zeros(batch, dtype=complex)
            total_grad = np.zeros((batch, self.m), dtype=complex) if with_grad else None
            for term in terms:
                val, grad = self._term_batch(term, values, grads)
                total += val
                if total_grad is not None and grad is not None:
                    total_grad += grad
            values[:, target] = -inverse * total
            if grads is not None and total_grad is not None:
                grads[:, target, :] = -inverse * total_grad
        return values, grads

    def values_batch(self, Z: np.ndarray) -> np.ndarray:
        """All variable values for a (batch, m) array of core points."""
        values, _ = self._propagate(np.atleast_2d(Z), with_grad=False)
        return values

    def residuals_batch(self, Z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Residuals (batch, R) and Jacobians (batch, R, m) of the residual generators."""
        Z = np.atleast_2d(Z)
        values, grads = self._propagate(Z, with_grad=True)
        assert grads is not None
        batch = Z.shape[0]
        rows = len(self.residual_terms)
        residuals = np.zeros((batch, rows), dtype=complex)
        jacobian = np.zeros((batch, rows, self.m), dtype=complex)
        for row, terms in enumerate(self.residual_terms):
            for term in terms:
                val, grad = self._term_batch(term, values, grads)
                residuals[:, row] += val
                jacobian[:, row, :] += grad  # type: ignore[operator]
        return residuals, jacobian

    def full_residual(self, values: np.ndarray) -> float:
        """Max absolute value of every original generator at full variable values."""
        if not self.all_terms:
            return 0.0
        batch_values = np.atleast_2d(values)
        worst = 0.0
        for terms in self.all_terms:
            total = np.zeros(batch_values.shape[0], dtype=complex)
            for term in terms:
                val, _ = self._term_batch(term, batch_values, None)
                total += val
            worst = max(worst, float(np.max(np.abs(total))))
        return worst

    # =========================================================================
    # mpmath scalars
    # =========================================================================

    @staticmethod
    def _term_mp(
        term: Term, values: list, grads: list[list] | None
    ) -> tuple[object, list | None]:
        coeff = mpmath.mpf(term.coeff.numerator) / term.coeff.denominator
        powers = [values[i] ** e for i, e in term.factors]
        val = coeff
        for power in powers:
            val = val * power
        if grads is None:
            return val, None
        m = len(grads[0]) if grads else 0
        grad = [mpmath.mpc(0)] * m
        for position, (i, e) in enumerate(term.factors):
            partial = coeff * e * values[i] ** (e - 1)
            for other, power in enumerate(powers):
                if other != position:
                    partial = partial * power
            grad = [g + partial * d for g, d in zip(grad, grads[i])]
        return val, grad

    def _propagate_mp(self, z: Sequence, with_grad: bool) -> tuple[list, list[list] | None]:
        values: list = [mpmath.mpc(0)] * self.nvars
        grads: list[list] | None = (
            [[mpmath.mpc(0)] * self.m for _ in range(self.nvars)] if with_grad else None
        )
        for position, index in enumerate(self.core_indices):
            values[index] = mpmath.mpc(z[position])
            if grads is not None:
                grads[index] = [mpmath.mpc(1 if p == position else 0) for p in range(self.m)]
        for target, divisor, terms in self._mp_steps:
            inverse = mpmath.mpf(divisor.denominator) / divisor.numerator
            total = mpmath.mpc(0)
            total_grad = [mpmath.mpc(0)] * self.m
            for term in terms:
                val, grad = self._term_mp(term, values, grads)
                total += val
                if grad is not None:
                    total_grad = [a + b for a, b in zip(total_grad, grad)]
            values[target] = -inverse * total
            if grads is not None:
                grads[target] = [-inverse * g for g in total_grad]
        return values, grads

    def values_mp(self, z: Sequence) -> list:
        """All variable values at a core point, in the current mpmath precision."""
        values, _ = self._propagate_mp(z, with_grad=False)
        return values

    def residuals_mp(self, z: Sequence) -> tuple[list, list[list]]:
        """Residual generator values and Jacobian rows at a core point."""
        values, grads = self._propagate_mp(z, with_grad=True)
        residuals = []
        jacobian = []
        for index in self.system.residual_indices:
            total = mpmath.mpc(0)
            row = [mpmath.mpc(0)] * self.m
            for term in self.system.generator_terms[index]:
                val, grad = self._term_mp(term, values, grads)
                total += val
                row = [a + b for a, b in zip(row, grad or [])]
            residuals.append(total)
            jacobian.append(row)
        return residuals, jacobian

    def full_residual_mp(self, values: Sequence) -> float:
        """Max absolute generator value at full variable values, computed in mpmath."""
        worst = mpmath.mpf(0)
        for terms in self.system.generator_terms:
            total = mpmath.mpc(0)
            for term in terms:
                val, _ = self._term_mp(term, list(values), None)
                total += val
            worst = max(worst, abs(total))
        return float(worst)
