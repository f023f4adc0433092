"""End-to-end analysis of one knot: parse, build, eliminate, solve, classify, report."""

import logging
from typing import NamedTuple

from cordaug.augment.classify import build_augmentations
from cordaug.augment.report import build_report
from cordaug.core.exceptions import CordaugError
from cordaug.core.models import (
    Augmentation,
    EliminationStrategy,
    KnotDiagram,
    KnotReport,
    RunConfig,
    SolutionSet,
    SolverConfig,
)
from cordaug.diagram.braid import parse_braid
from cordaug.diagram.gauss import parse_gauss
from cordaug.diagram.table import lookup
from cordaug.invariants import knot_determinant
from cordaug.polysys.cords import build_cord_system
from cordaug.polysys.elimination import eliminate
from cordaug.polysys.system import PolySystem
from cordaug.solver.engine import solve_zero_dim

logger = logging.getLogger(__name__)


class Analysis(NamedTuple):
    """Every stage's output for one knot."""

    diagram: KnotDiagram
    system: PolySystem
    solutions: SolutionSet
    augmentations: list[Augmentation]
    report: KnotReport


def resolve_diagram(config: RunConfig) -> KnotDiagram:
    """Diagram selected by a run config: name, Gauss code + signs, or braid + strands.

    Raises:
        CordaugError: No input selected
    """
    if config.name and not (config.gauss or config.braid is not None):
        return lookup(config.name, config.table)
    if config.gauss:
        return parse_gauss(config.gauss, config.signs or "", name=config.name)
    if config.braid is not None:
        strands = config.strands or (max((abs(g) for g in config.braid), default=0) + 1)
        return parse_braid(config.braid, strands, name=config.name)
    raise CordaugError("no knot input: give --name, --gauss with --signs, or --braid")


def _label(diagram: KnotDiagram) -> str:
    if diagram.name:
        return diagram.name
    if diagram.braid_origin is not None:
        return "braid " + " ".join(str(g) for g in diagram.braid_origin.word)
    return "gauss " + diagram.to_gauss()[0]


def analyze_diagram(
    diagram: KnotDiagram,
    solver: SolverConfig | None = None,
    elimination: EliminationStrategy = EliminationStrategy.AUTO,
) -> Analysis:
    """Run the full pipeline on a parsed diagram."""
    solver = solver or SolverConfig()
    name = _label(diagram)
    logger.info("Analyzing %s (%d crossings)", name, diagram.n)
    det = knot_determinant(diagram)
    system = eliminate(build_cord_system(diagram), elimination)
    logger.info("System for %s: %s", name, system.summary())
    solutions = solve_zero_dim(system, solver)
    augmentations = build_augmentations(diagram.n, solutions.points)
    report = build_report(
        name,
        det,
        augmentations,
        solutions,
        core_vars=len(system.core_vars),
        precision_digits=solver.precision_digits,
    )
    return Analysis(diagram, system, solutions, augmentations, report)


def analyze(config: RunConfig) -> Analysis:
    """Resolve the knot named by ``config`` and analyze it."""
    return analyze_diagram(resolve_diagram(config), config.solver, config.elimination)


def analyze_named(
    name: str,
    solver: SolverConfig,
    table: str | None = None,
    elimination: EliminationStrategy = EliminationStrategy.AUTO,
) -> KnotReport:
    """Report for a table knot; module-level so worker processes can pickle it."""
    diagram = lookup(name, table)
    return analyze_diagram(diagram, solver, elimination).report
