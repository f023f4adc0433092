"""Wirtinger presentation data of a diagram."""

from cordaug.core.models import KnotDiagram, WirtingerRelation


def wirtinger(diagram: KnotDiagram) -> list[WirtingerRelation]:
    """One relation m_j m_i^eps = m_i^eps m_k per crossing.

    j is the outgoing under arc, i the over arc, k the incoming under arc and
    eps the crossing sign, so m_j = m_i^eps m_k m_i^-eps.
    """
    return [
        WirtingerRelation(j=c.under_out, i=c.over, k=c.under_in, epsilon=c.sign)
        for c in diagram.crossings
    ]


def abelianization_is_cyclic(diagram: KnotDiagram) -> bool:
    """Check that the relations identify every meridian in the abelianization.

    Abelianized, each relation reads m_j = m_k; the meridians collapse to one
    class exactly when those identifications connect all arcs.
    """
    parent = list(range(diagram.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for relation in wirtinger(diagram):
        parent[find(relation.j)] = find(relation.k)
    return len({find(arc) for arc in diagram.arcs}) <= 1
