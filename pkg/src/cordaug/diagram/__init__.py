"""Knot diagram ingestion: Gauss codes, braid closures, Wirtinger data, knot table."""

from cordaug.diagram.braid import parse_braid
from cordaug.diagram.gauss import parse_gauss
from cordaug.diagram.table import load_table, lookup
from cordaug.diagram.wirtinger import abelianization_is_cyclic, wirtinger

__all__ = [
    "parse_gauss",
    "parse_braid",
    "wirtinger",
    "abelianization_is_cyclic",
    "load_table",
    "lookup",
]
