"""Core interfaces, models and registry for cordaug."""

from cordaug.core.exceptions import CordaugError
from cordaug.core.interfaces import ReportEmitter, SolverBackend
from cordaug.core.models import (
    Augmentation,
    KnotDiagram,
    KnotReport,
    PairVar,
    RepresentationSet,
    SolutionSet,
    SolverConfig,
)
from cordaug.core.registry import backends_by_priority, get_backend, get_emitter, register

__all__ = [
    "Augmentation",
    "KnotDiagram",
    "KnotReport",
    "PairVar",
    "RepresentationSet",
    "SolutionSet",
    "SolverConfig",
    "SolverBackend",
    "ReportEmitter",
    "backends_by_priority",
    "get_backend",
    "get_emitter",
    "register",
    "CordaugError",
]
