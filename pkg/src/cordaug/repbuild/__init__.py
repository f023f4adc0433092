"""Explicit representations, normal forms and character coordinates."""

from cordaug.repbuild.character import character_on_generators, nagasato_residuals, x_map
from cordaug.repbuild.construction import (
    alpha,
    build_A,
    build_representation,
    build_T,
    lift_trace_free,
)
from cordaug.repbuild.forms import build_sl2r, conjugate_su2
from cordaug.repbuild.fricke import fricke, mixed_trace_determinant, trace_gram

__all__ = [
    "alpha",
    "build_A",
    "build_representation",
    "build_sl2r",
    "build_T",
    "character_on_generators",
    "conjugate_su2",
    "fricke",
    "lift_trace_free",
    "mixed_trace_determinant",
    "nagasato_residuals",
    "trace_gram",
    "x_map",
]
