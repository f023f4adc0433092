"""Univariate eliminants of small reduced systems by cascaded resultants."""

import logging
from fractions import Fraction
from itertools import combinations

import sympy as sp
from sympy.polys.rings import PolyElement

logger = logging.getLogger(__name__)

MAX_PAIR_POLYS = 5


def _smallest(polys: list[sp.Expr], symbol: sp.Symbol, count: int) -> list[sp.Expr]:
    return sorted(polys, key=lambda e: (sp.Poly(e, symbol).degree(), sp.count_ops(e)))[:count]


def eliminant(reduced: list[PolyElement], target: int) -> list[Fraction] | None:
    """Square-free univariate polynomial in core variable ``target`` vanishing on every solution.

    Other variables are removed one at a time by pairwise resultants among the
    lowest-degree polynomials that contain them; the gcd of everything left in the
    target variable is the eliminant.

    Returns:
        Dense rational coefficients (highest degree first), or None when every
        resultant vanishes
    """
    if not reduced:
        return None
    symbols = list(reduced[0].ring.symbols)
    keep = symbols[target]
    current = [p.as_expr() for p in reduced]
    for symbol in symbols:
        if symbol == keep:
            continue
        free = [e for e in current if symbol not in e.free_symbols]
        bound = [e for e in current if symbol in e.free_symbols]
        produced = []
        for f, g in combinations(_smallest(bound, symbol, MAX_PAIR_POLYS), 2):
            resultant = sp.expand(sp.resultant(f, g, symbol))
            if resultant != 0:
                produced.append(resultant)
        current = free + produced
    univariate = [e for e in current if e != 0 and e.free_symbols <= {keep}]
    if not univariate:
        return None
    result = univariate[0]
    for other in univariate[1:]:
        result = sp.gcd(result, other)
    if not result.free_symbols:
        return [Fraction(1)]
    poly = sp.Poly(sp.sqf_part(result), keep)
    coeffs = [sp.Rational(c) for c in poly.all_coeffs()]
    logger.debug("Eliminant in %s has degree %d", keep, poly.degree())
    return [Fraction(int(c.p), int(c.q)) for c in coeffs]
