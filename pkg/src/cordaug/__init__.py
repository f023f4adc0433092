"""
cordaug: Reflective augmentations of the abelian cord ring of a knot.

The package turns a knot diagram into the polynomial system of its cord ring,
solves for the isolated augmentations, classifies them by rank and ellipticity,
and builds the trace-free SL2C, SU(2) or SL2R representations they induce.

Example Usage:
    from cordaug import RunConfig, analyze

    analysis = analyze(RunConfig(name="5_2"))
    print(analysis.report.counts)

    from cordaug.repbuild import build_representation

    rank3 = [aug for aug in analysis.augmentations if aug.rank == 3]
"""

from cordaug.core.exceptions import (
    ClassificationError,
    CordaugError,
    DiagramError,
    LookupFailure,
    RepresentationError,
    SolverError,
)
from cordaug.core.models import (
    Augmentation,
    DimFlag,
    KnotDiagram,
    KnotReport,
    RepForm,
    RepresentationSet,
    RunConfig,
    SolutionSet,
    SolverConfig,
)
from cordaug.core.registry import get_backend, get_emitter, register
from cordaug.pipeline import analyze, analyze_diagram

__version__ = "0.1.0"

__all__ = [
    # Models
    "Augmentation",
    "DimFlag",
    "KnotDiagram",
    "KnotReport",
    "RepForm",
    "RepresentationSet",
    "RunConfig",
    "SolutionSet",
    "SolverConfig",
    # Pipeline
    "analyze",
    "analyze_diagram",
    # Registry
    "get_backend",
    "get_emitter",
    "register",
    # Exceptions
    "CordaugError",
    "DiagramError",
    "SolverError",
    "ClassificationError",
    "RepresentationError",
    "LookupFailure",
]
