"""Cord systems and their elimination data.

A ``PolySystem`` carries the exact generators in the pair-variable ring and, once
reduced, a rewriting program: an ordered list of steps, each defining one eliminated
variable from variables already known. Numeric solving runs on that program
directly; the symbolic elimination map and the reduced generators in the core
variables are derived from it on demand.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from cordaug.core.exceptions import EliminationCycleError, MissingAssignmentError
from cordaug.core.models import EliminationStrategy, PairVar
from cordaug.polysys.polynomials import Term, normalize_sign, pair_ring, terms_of, total_degree

logger = logging.getLogger(__name__)


class Step(NamedTuple):
    """Rewriting step: variables[target] = -(sum of terms) / divisor."""

    target: int
    divisor: Fraction
    terms: tuple[Term, ...]
    generator: int


def _ground(ring: PolyRing, value: Fraction) -> PolyElement:
    return ring.ground_new(QQ(value.numerator, value.denominator))


def _eval_terms(terms: Sequence[Term], values: Sequence[complex]) -> complex:
    total = 0j
    for term in terms:
        product = complex(term.coeff)
        for index, exponent in term.factors:
            product *= values[index] ** exponent
        total += product
    return total


@dataclass
class PolySystem:
    """Cord-ring generators plus the elimination data produced by ``eliminate``."""

    n: int
    variables: list[PairVar]
    ring: PolyRing | None
    generators: list[PolyElement]
    raw_count: int = 0
    core_vars: list[PairVar] = field(default_factory=list)
    steps: list[Step] = field(default_factory=list)
    residual_indices: list[int] = field(default_factory=list)
    strategy: EliminationStrategy = EliminationStrategy.NONE
    name: str | None = None
    braid_strands: int | None = None

    def __post_init__(self) -> None:
        if not self.core_vars and not self.steps:
            self.core_vars = list(self.variables)
        if not self.residual_indices and not self.steps:
            self.residual_indices = list(range(len(self.generators)))

    # =========================================================================
    # Indexing
    # =========================================================================

    @cached_property
    def index(self) -> dict[PairVar, int]:
        """Variable -> ring generator index."""
        return {var: i for i, var in enumerate(self.variables)}

    @property
    def core_indices(self) -> list[int]:
        """Ring indices of the core variables."""
        return [self.index[var] for var in self.core_vars]

    @property
    def eliminated(self) -> list[PairVar]:
        """Eliminated variables in step order."""
        return [self.variables[step.target] for step in self.steps]

    @cached_property
    def generator_terms(self) -> list[list[Term]]:
        """Compact term lists of every generator."""
        return [terms_of(g) for g in self.generators]

    # =========================================================================
    # Evaluation
    # =========================================================================

    def evaluate(self, point: Mapping) -> np.ndarray:
        """Evaluate every generator at a point in complex floating arithmetic.

        Args:
            point: Value for every variable, keyed by PairVar or (r, s)

        Returns:
            Residual vector, one entry per generator

        Raises:
            MissingAssignmentError: Some variable is not assigned
        """
        values: list[complex] = []
        missing: list[str] = []
        for var in self.variables:
            # PairVar hashes like the plain (r, s) tuple
            if var in point:
                values.append(complex(point[var]))
            else:
                missing.append(var.name)
                values.append(0j)
        if missing:
            raise MissingAssignmentError(
                f"{len(missing)} variables unassigned", missing=missing, knot=self.name
            )
        return np.array(
            [_eval_terms(terms, values) for terms in self.generator_terms], dtype=complex
        )

    def back_substitute(self, core_values: Sequence[complex]) -> np.ndarray:
        """Values of every variable from core values, running the rewriting steps."""
        if len(core_values) != len(self.core_vars):
            raise MissingAssignmentError(
                f"expected {len(self.core_vars)} core values, got {len(core_values)}",
                missing=[v.name for v in self.core_vars[len(core_values):]],
                knot=self.name,
            )
        values = [0j] * len(self.variables)
        for index, value in zip(self.core_indices, core_values):
            values[index] = complex(value)
        for step in self.steps:
            values[step.target] = -_eval_terms(step.terms, values) / complex(step.divisor)
        return np.array(values, dtype=complex)

    # =========================================================================
    # Symbolic view of the elimination
    # =========================================================================

    @cached_property
    def core_ring(self) -> PolyRing | None:
        """Ring on the core variables alone."""
        return pair_ring(self.core_vars)

    @cached_property
    def elimination_map(self) -> dict[PairVar, PolyElement]:
        """Eliminated variable -> exact polynomial in the core variables."""
        images = self._image_cache
        return {self.variables[step.target]: images[step.target] for step in self.steps}

    def _images(self) -> list[PolyElement]:
        core_ring = self.core_ring
        if core_ring is None:
            return []
        images: list[PolyElement | None] = [None] * len(self.variables)
        for position, index in enumerate(self.core_indices):
            images[index] = core_ring.gens[position]
        for step in self.steps:
            images[step.target] = -self._term_image(step.terms, images) * _ground(
                core_ring, 1 / step.divisor
            )
        return images  # type: ignore[return-value]

    def _term_image(self, terms: Sequence[Term], images: list[PolyElement | None]) -> PolyElement:
        core_ring = self.core_ring
        assert core_ring is not None
        total = core_ring.zero
        for term in terms:
            product = _ground(core_ring, term.coeff)
            for index, exponent in term.factors:
                image = images[index]
                if image is None:
                    raise EliminationCycleError(
                        f"step uses {self.variables[index].name} before it is defined",
                        knot=self.name,
                    )
                product *= image**exponent
            total += product
        return total

    def substitute(self, generator: PolyElement) -> PolyElement:
        """Image of an original generator under the elimination map."""
        if self.core_ring is None:
            return generator
        return self._term_image(terms_of(generator), self._image_cache)

    @cached_property
    def _image_cache(self) -> list[PolyElement]:
        return self._images()

    @cached_property
    def reduced(self) -> list[PolyElement]:
        """Reduced generators in the core variables: deduplicated, monic, sorted."""
        if self.core_ring is None:
            return []
        seen: dict[tuple, PolyElement] = {}
        for index in self.residual_indices:
            image = self.substitute(self.generators[index])
            if not image:
                continue
            image = image.monic()
            seen.setdefault(tuple(sorted(image.items())), image)
        return sorted(seen.values(), key=lambda p: (total_degree(p), len(p), str(p.as_expr())))

    def check_round_trip(self) -> bool:
        """Every substituted generator is zero or a unit multiple of a reduced generator."""
        reduced = {tuple(sorted(p.items())) for p in self.reduced}
        for generator in self.generators:
            image = self.substitute(generator)
            if image and tuple(sorted(image.monic().items())) not in reduced:
                return False
        return True

    # =========================================================================
    # Degree bookkeeping
    # =========================================================================

    @cached_property
    def predicted_degrees(self) -> list[int]:
        """Upper bounds on the degree of each variable's image in the core variables."""
        degrees = [0] * len(self.variables)
        for index in self.core_indices:
            degrees[index] = 1
        for step in self.steps:
            degrees[step.target] = max(
                (sum(degrees[i] * e for i, e in term.factors) for term in step.terms), default=0
            )
        return degrees

    @property
    def predicted_residual_degree(self) -> int:
        """Upper bound on the degree of the reduced generators."""
        bound = 0
        for index in self.residual_indices:
            for term in self.generator_terms[index]:
                bound = max(bound, sum(self.predicted_degrees[i] * e for i, e in term.factors))
        return bound

    @property
    def is_reduced(self) -> bool:
        """True once eliminate has produced rewriting steps."""
        return bool(self.steps)

    def summary(self) -> str:
        """One-line description for logs."""
        return (
            f"{len(self.generators)} generators in {len(self.variables)} variables, "
            f"{len(self.core_vars)} core, {len(self.residual_indices)} residual"
        )


def empty_system(n: int, name: str | None = None) -> PolySystem:
    """System of a diagram without pair variables (n <= 1)."""
    return PolySystem(n=n, variables=[], ring=None, generators=[], raw_count=n * n, name=name)


def normalized(generators: Sequence[PolyElement]) -> list[PolyElement]:
    """Drop zero and duplicate generators (up to sign), keeping first occurrences."""
    kept: list[PolyElement] = []
    seen: set[tuple] = set()
    for generator in generators:
        if not generator:
            continue
        generator = normalize_sign(generator)
        key = tuple(sorted(generator.items()))
        if key in seen:
            continue
        seen.add(key)
        kept.append(generator)
    return kept


def make_system(
    n: int,
    variables: list[PairVar],
    generators: Sequence[PolyElement],
    raw_count: int,
    name: str | None = None,
    braid_strands: int | None = None,
) -> PolySystem:
    """Build an unreduced system; generators must live in ``pair_ring(variables)``."""
    ring = pair_ring(variables)
    return PolySystem(
        n=n,
        variables=variables,
        ring=ring,
        generators=normalized(generators),
        raw_count=raw_count,
        name=name,
        braid_strands=braid_strands,
    )
