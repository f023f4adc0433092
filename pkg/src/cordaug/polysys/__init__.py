"""Exact cord-ring polynomial systems and rewriting elimination."""

from cordaug.polysys.cords import build_cord_system
from cordaug.polysys.elimination import eliminate
from cordaug.polysys.system import PolySystem

__all__ = ["PolySystem", "build_cord_system", "eliminate"]
