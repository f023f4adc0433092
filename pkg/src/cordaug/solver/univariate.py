"""Roots of univariate rational polynomials.

Roots come from the eigenvalues of the companion matrix (``numpy.roots``) and are
then polished by Newton's method in mpmath on the exact coefficients.
"""

import logging
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np
from sympy.polys.rings import PolyElement

from cordaug.core.exceptions import ZeroPolynomialError
from cordaug.polysys.polynomials import univariate_coefficients

logger = logging.getLogger(__name__)

POLISH_DIGITS = 50
POLISH_ITERATIONS = 80


def _coefficients(poly: PolyElement | Sequence) -> list[Fraction]:
    if isinstance(poly, PolyElement):
        coeffs = univariate_coefficients(poly)
    else:
        coeffs = [Fraction(c) for c in poly]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    return coeffs


def polish_root(coeffs: Sequence[Fraction], root: complex, digits: int = POLISH_DIGITS) -> complex:
    """Newton-polish one root on exact coefficients at extended precision."""
    with mpmath.workdps(digits):
        mp_coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in coeffs]
        derivative = [c * (len(mp_coeffs) - 1 - i) for i, c in enumerate(mp_coeffs[:-1])]
        z = mpmath.mpc(root)
        tolerance = mpmath.mpf(10) ** (-(digits - 5))
        for _ in range(POLISH_ITERATIONS):
            value = mpmath.polyval(mp_coeffs, z)
            slope = mpmath.polyval(derivative, z) if derivative else mpmath.mpc(0)
            if slope == 0:
                break
            step = value / slope
            z -= step
            if abs(step) <= tolerance * max(1, abs(z)):
                break
        return complex(z)


def poly_roots(poly: PolyElement | Sequence, digits: int = POLISH_DIGITS) -> list[complex]:
    """All roots, with multiplicity, of a univariate polynomial with rational coefficients.

    Args:
        poly: PolyElement in one variable, or dense coefficients (highest degree first)
        digits: Working precision of the polishing step

    Returns:
        deg(p) complex roots sorted by (real, imag)

    Raises:
        ZeroPolynomialError: p is the zero polynomial
    """
    coeffs = _coefficients(poly)
    if not coeffs:
        raise ZeroPolynomialError("roots of the zero polynomial are undefined")
    if len(coeffs) == 1:
        return []
    float_coeffs = np.array([float(c) for c in coeffs], dtype=float)
    estimates = np.roots(float_coeffs)
    roots = [polish_root(coeffs, complex(r), digits) for r in estimates]
    logger.debug("Degree %d polynomial: %d roots", len(coeffs) - 1, len(roots))
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))
