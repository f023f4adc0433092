"""Rewriting elimination of cord systems to a small core.

Each cord generator is linear with constant coefficient in the pair variables that
appear alone in a degree-one term. Starting from a seed set of known variables, a
generator whose only unknown variable is such a linear one defines that variable;
repeating this breadth-first gives an ordered program of rewriting steps. Whatever
generators are not used as steps become the residual system in the seed variables.
"""

import logging
from dataclasses import replace
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from cordaug.core.exceptions import EliminationCycleError
from cordaug.core.models import EliminationStrategy, PairVar
from cordaug.polysys.polynomials import Term
from cordaug.polysys.system import PolySystem, Step

logger = logging.getLogger(__name__)

MAX_SEED_ARCS = 4


class _Shape(NamedTuple):
    variables: frozenset[int]
    linear: dict[int, tuple[Fraction, tuple[Term, ...]]]


class Closure(NamedTuple):
    """Result of propagating a seed through the generators."""

    core: tuple[int, ...]
    steps: list[Step]
    known: frozenset[int]
    residual: list[int]


def _shape(terms: list[Term]) -> _Shape:
    variables = frozenset(i for term in terms for i, _ in term.factors)
    linear: dict[int, tuple[Fraction, tuple[Term, ...]]] = {}
    for var in variables:
        containing = [term for term in terms if any(i == var for i, _ in term.factors)]
        if len(containing) == 1 and containing[0].factors == ((var, 1),):
            rest = tuple(term for term in terms if term is not containing[0])
            linear[var] = (containing[0].coeff, rest)
    return _Shape(variables, linear)


def close(
    system: PolySystem, core: tuple[int, ...], shapes: list[_Shape] | None = None
) -> Closure:
    """Propagate known variables from a core seed until no generator defines a new one."""
    shapes = shapes if shapes is not None else [_shape(t) for t in system.generator_terms]
    known = set(core)
    steps: list[Step] = []
    used: set[int] = set()
    pending = list(range(len(shapes)))
    changed = True
    while changed:
        changed = False
        remaining = []
        for index in pending:
            unknown = shapes[index].variables - known
            if not unknown:
                continue
            if len(unknown) == 1:
                (var,) = unknown
                if var in shapes[index].linear:
                    divisor, rest = shapes[index].linear[var]
                    steps.append(Step(var, divisor, rest, index))
                    known.add(var)
                    used.add(index)
                    changed = True
                    continue
            remaining.append(index)
        pending = remaining
    residual = [index for index in range(len(shapes)) if index not in used]
    return Closure(core, steps, frozenset(known), residual)


def _residual_degree(system: PolySystem, closure: Closure) -> int:
    degrees = [0] * len(system.variables)
    for index in closure.core:
        degrees[index] = 1
    for step in closure.steps:
        degrees[step.target] = max(
            (sum(degrees[i] * e for i, e in term.factors) for term in step.terms), default=0
        )
    bound = 0
    for index in closure.residual:
        for term in system.generator_terms[index]:
            bound = max(bound, sum(degrees[i] * e for i, e in term.factors))
    return bound


def _pairs_within(system: PolySystem, arcs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(system.index[PairVar(r, s)] for r, s in combinations(sorted(arcs), 2))


def _validate(system: PolySystem, closure: Closure) -> None:
    defined = set(closure.core)
    for step in closure.steps:
        for term in step.terms:
            for index, _ in term.factors:
                if index not in defined:
                    raise EliminationCycleError(
                        f"step for {system.variables[step.target].name} reads "
                        f"undefined {system.variables[index].name}",
                        knot=system.name,
                    )
        if step.target in defined:
            raise EliminationCycleError(
                f"{system.variables[step.target].name} defined twice", knot=system.name
            )
        defined.add(step.target)


def _braid_seed(system: PolySystem, shapes: list[_Shape]) -> Closure | None:
    if not system.braid_strands:
        return None
    arcs = tuple(range(1, min(system.braid_strands, system.n) + 1))
    closure = close(system, _pairs_within(system, arcs), shapes)
    if len(closure.known) < len(system.variables):
        logger.warning("Braid strands do not generate the cord system of %s", system.name)
        return None
    return closure


def _greedy_seed(system: PolySystem, shapes: list[_Shape]) -> Closure:
    total = len(system.variables)
    best_partial: Closure | None = None
    for size in range(2, min(MAX_SEED_ARCS, system.n) + 1):
        complete: list[tuple[int, tuple[int, ...], Closure]] = []
        for arcs in combinations(range(1, system.n + 1), size):
            closure = close(system, _pairs_within(system, arcs), shapes)
            if len(closure.known) == total:
                complete.append((_residual_degree(system, closure), arcs, closure))
            elif best_partial is None or len(closure.known) > len(best_partial.known):
                best_partial = closure
        if complete:
            degree, arcs, closure = min(complete, key=lambda item: (item[0], item[1]))
            logger.debug("Seed arcs %s close the system (degree bound %d)", arcs, degree)
            return closure

    # No small arc set generates: add single pair variables greedily.
    core = list(best_partial.core if best_partial else (0,))
    closure = close(system, tuple(core), shapes)
    while len(closure.known) < total:
        options = []
        for var in range(total):
            if var in closure.known:
                continue
            trial = close(system, tuple(core + [var]), shapes)
            options.append((-len(trial.known), var, trial))
        _, var, closure = min(options, key=lambda item: (item[0], item[1]))
        core.append(var)
    logger.debug("Greedy pair additions give %d core variables", len(core))
    return closure


def eliminate(
    system: PolySystem, strategy: EliminationStrategy = EliminationStrategy.AUTO
) -> PolySystem:
    """Reduce a cord system to core variables plus a rewriting program.

    Args:
        system: Unreduced system from build_cord_system
        strategy: Seed choice; AUTO uses braid strands when the diagram came from
            a braid, otherwise the smallest generating arc set

    Returns:
        New PolySystem with core_vars, steps and residual_indices set
    """
    if not system.variables:
        return replace(system, strategy=strategy)
    if strategy == EliminationStrategy.NONE:
        return replace(
            system,
            core_vars=list(system.variables),
            steps=[],
            residual_indices=list(range(len(system.generators))),
            strategy=strategy,
        )

    shapes = [_shape(terms) for terms in system.generator_terms]
    closure = None
    if strategy in (EliminationStrategy.AUTO, EliminationStrategy.BRAID):
        closure = _braid_seed(system, shapes)
        if closure is None and strategy == EliminationStrategy.BRAID:
            logger.warning("No braid data for %s; using greedy seeds", system.name)
    if closure is None:
        closure = _greedy_seed(system, shapes)

    try:
        _validate(system, closure)
    except EliminationCycleError as e:
        logger.warning("%s; keeping every variable in the core", e)
        return eliminate(system, EliminationStrategy.NONE)

    reduced = replace(
        system,
        core_vars=[system.variables[i] for i in closure.core],
        steps=closure.steps,
        residual_indices=closure.residual,
        strategy=strategy,
    )
    logger.info(
        "Eliminated %d of %d variables for %s (%d core)",
        len(closure.steps),
        len(system.variables),
        system.name or "<unnamed>",
        len(closure.core),
    )
    return reduced
