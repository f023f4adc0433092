"""Cord-ring ideal of a diagram."""

import logging

from sympy.polys.rings import PolyElement

from cordaug.core.models import KnotDiagram, PairVar, pair_list
from cordaug.polysys.polynomials import pair_ring
from cordaug.polysys.system import PolySystem, empty_system, make_system

logger = logging.getLogger(__name__)


def build_cord_system(diagram: KnotDiagram) -> PolySystem:
    """Generators x_lj + x_lk - x_li * x_ij for every crossing (i, j, k) and arc l.

    x_ll is the constant 2 and x_sr is x_rs. The n*n raw generators are reduced to
    the distinct nonzero ones (up to sign).
    """
    n = diagram.n
    variables = pair_list(n)
    ring = pair_ring(variables)
    if ring is None:
        return empty_system(n, name=diagram.name)

    gens = dict(zip(variables, ring.gens))
    two = ring.ground_new(ring.domain(2))

    def x(a: int, b: int) -> PolyElement:
        if a == b:
            return two
        return gens[PairVar.of(a, b)]

    raw: list[PolyElement] = []
    for crossing in diagram.crossings:
        i, j, k = crossing.over, crossing.under_in, crossing.under_out
        for l in diagram.arcs:
            raw.append(x(l, j) + x(l, k) - x(l, i) * x(i, j))

    strands = diagram.braid_origin.strands if diagram.braid_origin else None
    system = make_system(
        n, variables, raw, raw_count=len(raw), name=diagram.name, braid_strands=strands
    )
    logger.info("Cord system for %s: %s", diagram.name or "<unnamed>", system.summary())
    return system
