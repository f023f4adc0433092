"""Trace-free character coordinates (x_ab, x_abc) of augmentations."""

import logging
from itertools import combinations
from typing import NamedTuple

import numpy as np

from cordaug.augment.rank import cord_matrix
from cordaug.core.exceptions import NoBraidDataError, RankTooHighError, RelationViolationError
from cordaug.core.models import Augmentation, CharacterPoint, KnotDiagram, RepresentationSet
from cordaug.diagram.braid import strand_arcs
from cordaug.diagram.wirtinger import wirtinger
from cordaug.repbuild.construction import principal_sqrt

logger = logging.getLogger(__name__)

DELTA_TOL = 1e-10
TRACE_TOL = 1e-9


class NagasatoResiduals(NamedTuple):
    """Max absolute residual per defining-equation family."""

    f2: float
    f3: float
    h: float
    r: float

    @property
    def worst(self) -> float:
        return max(self)


def _gram_minors(gram: np.ndarray, triples: list[tuple[int, int, int]]) -> np.ndarray:
    # T(a, b) = det [x_{a_i b_j}] for every pair of increasing triples
    index = np.array(triples, dtype=int) - 1
    if index.size == 0:
        return np.zeros((0, 0), dtype=complex)
    blocks = gram[index[:, None, :, None], index[None, :, None, :]]
    return np.linalg.det(blocks)


def x_map(aug: Augmentation, root_choice: int = 1) -> CharacterPoint:
    """Character coordinates of a rank <= 3 augmentation.

    Pairs copy the augmentation values. At rank 3 the triple a with the largest
    |delta(a)| = |T(a,a)| / 2 gets root_choice * sqrt(delta(a)) and every other
    triple b follows from x_a x_b = T(a,b) / 2; below rank 3 all triples are 0.

    Raises:
        RankTooHighError: rank above 3
    """
    if aug.rank > 3:
        raise RankTooHighError(f"no character for rank {aug.rank}", rank=aug.rank)
    if root_choice not in (1, -1):
        raise ValueError(f"root_choice must be +1 or -1, got {root_choice}")
    triples = list(combinations(range(1, aug.n + 1), 3))
    x_triple = np.zeros(len(triples), dtype=complex)
    if aug.rank == 3 and triples:
        minors = _gram_minors(cord_matrix(aug), triples)
        pivot = int(np.argmax(np.abs(np.diag(minors))))
        delta = minors[pivot, pivot] / 2
        if abs(delta) > DELTA_TOL:
            root = root_choice * principal_sqrt(delta)
            x_triple = minors[pivot] / (2 * root)
            x_triple[pivot] = root
    return CharacterPoint(n=aug.n, x_pair=list(aug.values), x_triple=list(x_triple))


def nagasato_residuals(point: CharacterPoint, diagram: KnotDiagram) -> NagasatoResiduals:
    """Evaluate the four families of defining equations at ``point``.

    (F2) x_ja + x_ka - x_ji x_ia and (F3) x_jab + x_kab - x_ji x_iab at every
    crossing (i over, j and k under); (H) x_a x_b - T(a,b)/2 over pairs of
    triples; (R) the 4x4 determinants on labels 1, 2, a, b.
    """
    n = point.n
    labels = range(1, n + 1)
    f2 = f3 = 0.0
    for relation in wirtinger(diagram):
        i, j, k = relation.i, relation.j, relation.k
        x_ji = point.pair(j, i)
        for a in labels:
            f2 = max(f2, abs(point.pair(j, a) + point.pair(k, a) - x_ji * point.pair(i, a)))
        for a, b in combinations(labels, 2):
            residual = point.triple(j, a, b) + point.triple(k, a, b) - x_ji * point.triple(i, a, b)
            f3 = max(f3, abs(residual))

    gram = np.array([[point.pair(a, b) for b in labels] for a in labels], dtype=complex)
    triples = list(combinations(labels, 3))
    h = 0.0
    if triples:
        minors = _gram_minors(gram, triples)
        x = np.asarray(point.x_triple, dtype=complex)
        h = float(np.max(np.abs(np.outer(x, x) - minors / 2)))

    r = 0.0
    for a, b in combinations(range(3, n + 1), 2):
        index = [0, 1, a - 1, b - 1]
        r = max(r, abs(np.linalg.det(gram[np.ix_(index, index)])))
    return NagasatoResiduals(float(f2), float(f3), h, float(r))


def triple_traces(rep: RepresentationSet) -> list[complex]:
    """-tr(rho(m_a) rho(m_b) rho(m_c)) for a<b<c, in lexicographic order."""
    meridians = rep.meridians or [rep.T @ A for A in rep.A]
    return [
        complex(-np.trace(meridians[a] @ meridians[b] @ meridians[c]))
        for a, b, c in combinations(range(len(meridians)), 3)
    ]


def triples_match(point: CharacterPoint, rep: RepresentationSet, tol: float = 1e-8) -> bool:
    """Triple coordinates agree with the representation's triple traces up to one global sign."""
    x = np.asarray(point.x_triple, dtype=complex)
    traces = np.asarray(triple_traces(rep), dtype=complex)
    scale = max(1.0, float(np.max(np.abs(traces), initial=0.0)))
    return any(
        float(np.max(np.abs(sign * x - traces), initial=0.0)) <= tol * scale for sign in (1, -1)
    )


def character_on_generators(
    aug: Augmentation, diagram: KnotDiagram, rep: RepresentationSet | None = None
) -> dict[tuple[int, int], complex]:
    """Double-cover character values on g_i g_j^-1 for braid strands 1..N.

    The values are eps_ij. When ``rep`` is given they are checked against
    tr(A_i A_j^-1).

    Raises:
        NoBraidDataError: The diagram did not come from a braid word
        RelationViolationError: A trace differs from eps_ij by more than 1e-9
    """
    if diagram.braid_origin is None:
        raise NoBraidDataError("diagram has no braid presentation", knot=diagram.name)
    strands = strand_arcs(diagram)
    values = {(i, j): aug.value(i, j) for i, j in combinations(strands, 2)}
    if rep is not None:
        mismatches = []
        for (i, j), value in values.items():
            trace = complex(np.trace(rep.A[i - 1] @ np.linalg.inv(rep.A[j - 1])))
            if abs(trace - value) > TRACE_TOL * max(1.0, abs(value)):
                mismatches.append((i, abs(trace - value)))
        if mismatches:
            raise RelationViolationError(
                "double-cover traces differ from augmentation values",
                violations=mismatches,
                knot=diagram.name,
            )
    return values
