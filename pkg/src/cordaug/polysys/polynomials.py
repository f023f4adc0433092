"""Exact sparse polynomials in pair variables.

Polynomials are sympy ``PolyElement`` values over QQ in a ring whose generators are
the pair variables x_rs in (r, s) order with graded lexicographic monomial order.
This module holds the ring construction, the canonical text form and the compact
term lists that numeric evaluation runs on.
"""

from fractions import Fraction
from typing import NamedTuple, Sequence

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from cordaug.core.models import PairVar


class Term(NamedTuple):
    """Monomial with a rational coefficient; factors are (variable index, exponent)."""

    coeff: Fraction
    factors: tuple[tuple[int, int], ...]


def pair_ring(variables: Sequence[PairVar]) -> PolyRing | None:
    """Rational polynomial ring on the given pair variables; None when there are none."""
    if not variables:
        return None
    return PolyRing([v.name for v in variables], QQ, grlex)


def to_fraction(coeff: object) -> Fraction:
    """Convert a QQ domain element to a Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))  # type: ignore[attr-defined]


def terms_of(poly: PolyElement) -> list[Term]:
    """Compact term list of a polynomial, in the ring's monomial order."""
    return [
        Term(to_fraction(coeff), tuple((i, e) for i, e in enumerate(monom) if e))
        for monom, coeff in poly.terms()
    ]


def variables_of(poly: PolyElement) -> set[int]:
    """Indices of the ring generators a polynomial depends on."""
    return {i for monom in poly.monoms() for i, e in enumerate(monom) if e}


def total_degree(poly: PolyElement) -> int:
    """Total degree; -1 for the zero polynomial."""
    if not poly:
        return -1
    return max(sum(monom) for monom in poly.monoms())


def normalize_sign(poly: PolyElement) -> PolyElement:
    """Multiply by -1 when the leading coefficient is negative."""
    if poly and poly.LC < 0:
        return -poly
    return poly


def _format_coeff(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_polynomial(poly: PolyElement) -> str:
    """Canonical text form: grlex-descending terms with explicit rational coefficients.

    Example: ``1*x_1_2^2 - 3*x_1_2 + 2``
    """
    if not poly:
        return "0"
    names = [str(symbol) for symbol in poly.ring.symbols]
    pieces: list[str] = []
    for index, term in enumerate(terms_of(poly)):
        coeff = term.coeff
        sign = "-" if coeff < 0 else "+"
        body = _format_coeff(abs(coeff))
        if term.factors:
            monomial = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in term.factors
            )
            body = f"{body}*{monomial}"
        if index == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


def univariate_coefficients(poly: PolyElement) -> list[Fraction]:
    """Dense coefficients (highest degree first) of a polynomial in one ring generator.

    Raises:
        ValueError: The polynomial depends on more than one generator
    """
    if len(variables_of(poly)) > 1:
        raise ValueError("polynomial is not univariate")
    degree = max((sum(monom) for monom in poly.monoms()), default=0)
    dense = [Fraction(0)] * (degree + 1)
    for monom, coeff in poly.terms():
        dense[degree - sum(monom)] = to_fraction(coeff)
    return dense
