"""Explicit trace-free representations from rank-3 augmentations.

The double-cover matrices A_1..A_n are built in a normal form after relabeling
arcs so that a nondegenerate 3x3 principal minor sits at positions 1, 2, 3:

    A_1 = Id,  A_2 = diag(d, e12 - d),  A_3 = [[a, 1], [a(e13 - a) - 1, e13 - a]],
    A_l = [[a_l, b_l], [c_l, e1l - a_l]]

with d a root of d^2 - e12 d + 1, a_l = (e2l - e1l d) / (e12 - 2d),
alpha = 1 - a(e13 - a), c_l = K_l + alpha b_l and b_l = -K_l / (2 alpha) where
K_l = a(e1l - a_l) + (e13 - a) a_l - e3l. Meridians map to T A_i for a
trace-zero T with (T A_i)^2 = -Id.
"""

import cmath
import logging
from itertools import combinations
from typing import Sequence

import numpy as np

from cordaug.augment.rank import cord_matrix
from cordaug.core.exceptions import (
    DenominatorZeroError,
    NoNondegenerateMinorError,
    NoSolutionError,
    QuadraticDegenerateError,
    RelationViolationError,
)
from cordaug.core.models import (
    Augmentation,
    ConstructionAux,
    KnotDiagram,
    RepForm,
    RepresentationSet,
    VerificationSummary,
)
from cordaug.diagram.wirtinger import wirtinger

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=complex)
MINOR_TOL = 1e-6
BOUNDARY_TOL = 1e-6
TRACE_TOL = 1e-9
RELATION_TOL = 1e-9
NULL_RATIO = 1e-8


def principal_sqrt(z: complex) -> complex:
    """Square root with non-negative real part, non-negative imaginary part on the cut."""
    root = cmath.sqrt(complex(z))
    if root.real < 0 or (root.real == 0 and root.imag < 0):
        root = -root
    return root


def _scale(aug: Augmentation) -> float:
    return max(1.0, max((abs(v) for v in aug.values), default=1.0))


# =============================================================================
# Relabeling and alpha
# =============================================================================


def _minor3(aug: Augmentation, p: int, q: int, r: int) -> complex:
    e12, e13, e23 = aug.value(p, q), aug.value(p, r), aug.value(q, r)
    return -2 * (e12 * e12 + e13 * e13 + e23 * e23 - e12 * e13 * e23 - 4)


def alpha(aug: Augmentation, triple: tuple[int, int, int] = (1, 2, 3)) -> complex:
    """alpha = (e12^2 + e13^2 + e23^2 - e12 e13 e23 - 4) / (e12^2 - 4) for the given labels.

    Raises:
        DenominatorZeroError: e12 = +-2
    """
    p, q, r = triple
    e12, e13, e23 = aug.value(p, q), aug.value(p, r), aug.value(q, r)
    denominator = e12 * e12 - 4
    if abs(denominator) < BOUNDARY_TOL:
        raise DenominatorZeroError(f"eps_{p}{q} = {e12:.6g} is +-2")
    return (e12 * e12 + e13 * e13 + e23 * e23 - e12 * e13 * e23 - 4) / denominator


def choose_relabeling(aug: Augmentation) -> list[int]:
    """Arc order placing a nondegenerate 3x3 minor first.

    Triples are scanned lexicographically; within each, any of its three pairs
    may play (1, 2). The choice whose eps_12 lies farthest from +-2 wins, the
    first one found on ties.

    Raises:
        NoNondegenerateMinorError: Every 3x3 principal minor vanishes
    """
    scale = _scale(aug) ** 3
    best: tuple[float, tuple[int, int, int]] | None = None
    for p, q, r in combinations(range(1, aug.n + 1), 3):
        if abs(_minor3(aug, p, q, r)) <= MINOR_TOL * scale:
            continue
        for first, second, third in ((p, q, r), (p, r, q), (q, r, p)):
            e12 = aug.value(first, second)
            distance = min(abs(e12 - 2), abs(e12 + 2))
            if distance > BOUNDARY_TOL and (best is None or distance > best[0]):
                best = (distance, (first, second, third))
    if best is None:
        raise NoNondegenerateMinorError("no nondegenerate 3x3 principal minor")
    head = list(best[1])
    return head + [label for label in range(1, aug.n + 1) if label not in head]


# =============================================================================
# Double-cover matrices
# =============================================================================


def _traces_residual(matrices: Sequence[np.ndarray], aug: Augmentation) -> float:
    inverses = [np.linalg.inv(A) for A in matrices]
    worst = 0.0
    for r, s in combinations(range(1, aug.n + 1), 2):
        value = np.trace(matrices[r - 1] @ inverses[s - 1])
        worst = max(worst, abs(value - aug.value(r, s)))
    return float(worst)


def build_A(aug: Augmentation, relabeling: Sequence[int] | None = None) -> RepresentationSet:
    """Double-cover matrices A_1..A_n with tr(A_r A_s^-1) = eps_rs.

    Args:
        aug: Rank-3 augmentation
        relabeling: Arc order to use (first three labels form the minor);
            chosen by choose_relabeling when omitted

    Returns:
        RepresentationSet with A (indexed by original label), relabeling and aux;
        aux lists are in relabeled order

    Raises:
        NoNondegenerateMinorError: No usable 3x3 minor
        DenominatorZeroError: eps_12 = +-2 at the chosen labels
        QuadraticDegenerateError: alpha vanishes or a forced b_l misses det 1
    """
    if aug.rank != 3:
        raise NoNondegenerateMinorError(f"construction needs rank 3, got rank {aug.rank}")
    order = list(relabeling) if relabeling is not None else choose_relabeling(aug)
    first, second, third = order[:3]
    if abs(_minor3(aug, first, second, third)) <= MINOR_TOL * _scale(aug) ** 3:
        raise NoNondegenerateMinorError(f"minor at {order[:3]} vanishes")

    e12 = aug.value(first, second)
    e13 = aug.value(first, third)
    e23 = aug.value(second, third)
    if abs(e12 * e12 - 4) < BOUNDARY_TOL:
        raise DenominatorZeroError(f"eps_{first}{second} = {e12:.6g} is +-2")
    d = (e12 + principal_sqrt(e12 * e12 - 4)) / 2
    denominator = e12 - 2 * d
    a = (e23 - e13 * d) / denominator
    alpha_value = 1 - a * (e13 - a)
    if abs(alpha_value) < BOUNDARY_TOL:
        raise QuadraticDegenerateError("alpha vanishes; the b_l quadratic is degenerate")

    aux = ConstructionAux(d=d, a=a, alpha=alpha_value)
    matrices: dict[int, np.ndarray] = {}
    for position, label in enumerate(order):
        e1l = aug.value(first, label)
        e2l = aug.value(second, label)
        e3l = aug.value(third, label)
        a_l = (e2l - e1l * d) / denominator
        k_l = a * (e1l - a_l) + (e13 - a) * a_l - e3l
        b_l = -k_l / (2 * alpha_value)
        c_l = k_l + alpha_value * b_l
        if position == 0:
            A = IDENTITY.copy()
        elif position == 1:
            A = np.array([[d, 0], [0, e12 - d]], dtype=complex)
        elif position == 2:
            A = np.array([[a, 1], [a * (e13 - a) - 1, e13 - a]], dtype=complex)
        else:
            A = np.array([[a_l, b_l], [c_l, e1l - a_l]], dtype=complex)
            det_error = abs(np.linalg.det(A) - 1)
            if det_error > TRACE_TOL * _scale(aug) ** 2:
                raise QuadraticDegenerateError(
                    f"double root b_{label} misses det 1 by {det_error:.3e}",
                    details={"label": label},
                )
        matrices[label] = A
        aux.a_l.append(a_l)
        aux.b_l.append(b_l)
        aux.c_l.append(c_l)
        aux.b_discriminant.append(k_l * k_l - 4 * alpha_value * (1 - a_l * (e1l - a_l)))
        aux.shifted_discriminant.append(k_l * k_l + 4 * alpha_value * a_l * (e1l - a_l))

    A_list = [matrices[label] for label in range(1, aug.n + 1)]
    trace = _traces_residual(A_list, aug)
    logger.debug("Built A-matrices with relabeling %s, trace residual %.3e", order, trace)
    return RepresentationSet(
        A=A_list,
        relabeling=order,
        aux=aux,
        verification=VerificationSummary(trace=trace),
    )


def closed_form_T(alpha_value: complex) -> np.ndarray:
    """T = [[0, i alpha^-1/2], [i alpha^1/2, 0]] with the principal square root."""
    root = principal_sqrt(alpha_value)
    return np.array([[0, 1j / root], [1j * root, 0]], dtype=complex)


def build_T(rep: RepresentationSet) -> np.ndarray:
    """Trace-zero, determinant-one T with (T A_i)^2 = -Id for every A_i.

    (t11, t21, t12) spans the null space of the rows (a_i - d_i, b_i, c_i). For
    a normal-form A-set the sign is chosen to match the closed form.

    Raises:
        NoSolutionError: The null space is not one-dimensional or T is singular
    """
    rows = np.array([[A[0, 0] - A[1, 1], A[0, 1], A[1, 0]] for A in rep.A], dtype=complex)
    if rows.size == 0 or not np.any(np.abs(rows) > 0):
        raise NoSolutionError("all A-matrices are scalar; every commutator has trace 2")
    _, singular_values, vh = np.linalg.svd(rows)
    padded = np.concatenate([singular_values, np.zeros(3 - singular_values.size)])
    if padded[1] <= NULL_RATIO * padded[0]:
        raise NoSolutionError("orthogonality system has a 2-dimensional solution space")
    if padded[2] > NULL_RATIO * padded[0]:
        raise NoSolutionError("orthogonality system has only the zero solution")

    t11, t21, t12 = vh[-1].conj()
    T = np.array([[t11, t12], [t21, -t11]], dtype=complex)
    det = -t11 * t11 - t12 * t21
    if abs(det) < NULL_RATIO:
        raise NoSolutionError("orthogonal solution gives a singular T")
    T = T / principal_sqrt(det)

    if rep.aux is not None:
        reference = closed_form_T(rep.aux.alpha)
        if np.linalg.norm(T + reference) < np.linalg.norm(T - reference):
            T = -T
    else:
        flat = T.ravel()
        lead = flat[np.argmax(np.abs(flat))]
        if lead.real < 0 or (lead.real == 0 and lead.imag < 0):
            T = -T

    square = max(float(np.max(np.abs((T @ A) @ (T @ A) + IDENTITY))) for A in rep.A)
    if square > RELATION_TOL * max(1.0, float(np.max(np.abs(T))) ** 2):
        raise NoSolutionError(f"(T A_i)^2 misses -Id by {square:.3e}")
    return T


# =============================================================================
# Meridian images
# =============================================================================


def relation_residuals(meridians: Sequence[np.ndarray], diagram: KnotDiagram) -> list[float]:
    """Residual of m_j m_i^eps = m_i^eps m_k at every crossing, in crossing order."""
    residuals = []
    for relation in wirtinger(diagram):
        Mi = meridians[relation.i - 1]
        if relation.epsilon < 0:
            Mi = np.linalg.inv(Mi)
        lhs = meridians[relation.j - 1] @ Mi
        rhs = Mi @ meridians[relation.k - 1]
        residuals.append(float(np.max(np.abs(lhs - rhs))))
    return residuals


def verify_representation(
    rep: RepresentationSet,
    aug: Augmentation | None = None,
    diagram: KnotDiagram | None = None,
) -> VerificationSummary:
    """Largest residuals of the square, trace, relation and determinant conditions.

    The trace residual is recomputed from the meridians when ``aug`` is given and
    the relation residual when ``diagram`` is given; otherwise they are kept.
    """
    meridians = rep.meridians or [rep.T @ A for A in rep.A]
    summary = rep.verification.model_copy()
    summary.square = max(
        (float(np.max(np.abs(M @ M + IDENTITY))) for M in meridians), default=0.0
    )
    if aug is not None and meridians:
        summary.trace = _traces_residual(meridians, aug)
    summary.determinant = max(
        (abs(complex(np.linalg.det(X)) - 1) for X in list(rep.A) + list(meridians)),
        default=0.0,
    )
    if diagram is not None:
        summary.relation = max(relation_residuals(meridians, diagram), default=0.0)
    return summary


def lift_trace_free(
    T: np.ndarray, rep: RepresentationSet, diagram: KnotDiagram
) -> RepresentationSet:
    """Meridian images T A_i, checked against every Wirtinger relation.

    Raises:
        RelationViolationError: Some relation residual exceeds 1e-9 (scaled by the
            largest entry)
    """
    meridians = [T @ A for A in rep.A]
    residuals = relation_residuals(meridians, diagram)
    scale = max(1.0, max(float(np.max(np.abs(M))) for M in meridians) ** 2)
    violations = [
        (index, residual)
        for index, residual in enumerate(residuals)
        if residual > RELATION_TOL * scale
    ]
    if violations:
        raise RelationViolationError(
            f"{len(violations)} Wirtinger relations fail",
            violations=violations,
            knot=diagram.name,
        )
    lifted = rep.model_copy(update={"T": T, "meridians": meridians})
    lifted.verification = verify_representation(lifted, diagram=diagram)
    return lifted


def build_representation(
    aug: Augmentation,
    diagram: KnotDiagram,
    relabeling: Sequence[int] | None = None,
) -> RepresentationSet:
    """build_A, build_T and lift_trace_free in one step (generic SL2C form)."""
    rep = build_A(aug, relabeling)
    T = build_T(rep)
    lifted = lift_trace_free(T, rep, diagram)
    lifted.verification = verify_representation(lifted, aug, diagram)
    lifted.form = RepForm.GENERIC_SL2C
    return lifted


def magic_residual(rep: RepresentationSet, aug: Augmentation) -> float:
    """Largest deviation of (c_l - b_l alpha)^2 + alpha(e1l^2 - 4) - alpha(2a_l - e1l)^2
    from alpha det_l / (e12^2 + e13^2 + e23^2 - e12 e13 e23 - 4) over all positions l.

    det_l is the 4x4 principal minor of the cord matrix on positions 1, 2, 3, l.
    """
    if rep.aux is None:
        raise NoSolutionError("representation carries no construction data")
    order = rep.relabeling
    first, second, third = order[:3]
    e12, e13, e23 = aug.value(first, second), aug.value(first, third), aug.value(second, third)
    gram = e12 * e12 + e13 * e13 + e23 * e23 - e12 * e13 * e23 - 4
    matrix = cord_matrix(aug)
    alpha_value = complex(rep.aux.alpha)
    worst = 0.0
    for position, label in enumerate(order):
        a_l, b_l, c_l = rep.aux.a_l[position], rep.aux.b_l[position], rep.aux.c_l[position]
        e1l = aug.value(first, label)
        lhs = (
            (c_l - b_l * alpha_value) ** 2
            + alpha_value * (e1l * e1l - 4)
            - alpha_value * (2 * a_l - e1l) ** 2
        )
        index = [first - 1, second - 1, third - 1, label - 1]
        det_l = np.linalg.det(matrix[np.ix_(index, index)]) if position >= 3 else 0.0
        worst = max(worst, abs(lhs - alpha_value * det_l / gram))
    return float(worst)
