"""Abstract interfaces for pluggable solver backends and report emitters.

Backends feed candidate core points of a reduced cord system into a point pool,
which refines, certifies and deduplicates them. Emitters render reports in one output format.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from cordaug.core.models import KnotReport, RepresentationSet, SolverConfig
    from cordaug.polysys.system import PolySystem
    from cordaug.solver.pool import PointPool


class SolverBackend(ABC):
    """Abstract interface for candidate-point generators.

    Implementations: UnivariateBackend, ResultantBackend, NewtonBackend
    """

    name: str = ""
    priority: int = 100

    @abstractmethod
    def applicable(self, system: PolySystem, config: SolverConfig) -> bool:
        """Check whether this backend can handle the reduced system.

        Args:
            system: Reduced cord system
            config: Solver settings

        Returns:
            True if the backend should be tried
        """

    @abstractmethod
    def collect(self, system: PolySystem, pool: PointPool, config: SolverConfig) -> int:
        """Feed candidate core points into the pool.

        Args:
            system: Reduced cord system
            pool: Pool that refines, certifies and deduplicates candidates
            config: Solver settings

        Returns:
            Number of starts or candidates consumed
        """

    @property
    def exhaustive(self) -> bool:
        """True when the candidate list provably contains every isolated point."""
        return False


class ReportEmitter(ABC):
    """Abstract interface for report renderers."""

    @abstractmethod
    def emit_report(self, report: KnotReport) -> str:
        """Render a single knot report.

        Args:
            report: Analysis summary

        Returns:
            Rendered text
        """

    @abstractmethod
    def emit_table(self, reports: list[KnotReport]) -> str:
        """Render several knot reports as one table.

        Args:
            reports: Analysis summaries in output order

        Returns:
            Rendered text
        """

    def emit_representation(self, representation: RepresentationSet) -> str:
        """Render a representation; JSON unless an emitter overrides it."""
        return representation.model_dump_json(indent=2)
