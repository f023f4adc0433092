"""SU(2) and SL2R normal forms of constructed representations."""

import logging

import numpy as np

from cordaug.augment.classify import classify_elliptic, find_witness
from cordaug.core.exceptions import (
    NotEllipticError,
    NoWitnessError,
    RepresentationError,
    UnitarityFailureError,
)
from cordaug.core.models import Augmentation, KnotDiagram, RepForm, RepresentationSet
from cordaug.repbuild.construction import (
    IDENTITY,
    build_representation,
    principal_sqrt,
    verify_representation,
)
from cordaug.repbuild.fricke import commutator_trace

logger = logging.getLogger(__name__)

UNITARITY_TOL = 1e-8
REALITY_TOL = 1e-9


def _elliptic(aug: Augmentation) -> bool:
    if aug.is_elliptic is None and aug.rank == 3 and aug.is_real:
        classify_elliptic(aug)
    return bool(aug.is_elliptic)


def conjugate_su2(rep: RepresentationSet, aug: Augmentation) -> RepresentationSet:
    """Conjugate a normal-form representation of an elliptic augmentation into SU(2).

    P has columns (alpha^-1/2, 1) and (alpha^-1/2, -1), the eigenvectors of the
    closed-form T; every P^-1 T A_l P is then unitary.

    Raises:
        NotEllipticError: The augmentation is not elliptic, or the normal form
            does not have eps_12 in (-2, 2) with alpha > 0
        UnitarityFailureError: A conjugated meridian image is not unitary
    """
    if not _elliptic(aug):
        raise NotEllipticError("SU(2) conjugation needs an elliptic augmentation")
    if rep.aux is None or rep.T is None:
        raise NotEllipticError("representation is not in constructed normal form")
    first, second = rep.relabeling[:2]
    e12 = aug.value(first, second)
    alpha_value = complex(rep.aux.alpha)
    if not -2 < e12.real < 2 or alpha_value.real <= 0:
        raise NotEllipticError(
            f"normal form has eps_12 = {e12:.6g} and alpha = {alpha_value:.6g}",
            details={"relabeling": rep.relabeling},
        )

    root = principal_sqrt(alpha_value)
    P = np.array([[1 / root, 1 / root], [1, -1]], dtype=complex)
    P_inv = np.linalg.inv(P)
    A = [P_inv @ X @ P for X in rep.A]
    T = P_inv @ rep.T @ P
    meridians = [T @ X for X in A]

    unitarity = max(float(np.max(np.abs(U @ U.conj().T - IDENTITY))) for U in meridians)
    if unitarity > UNITARITY_TOL:
        raise UnitarityFailureError(
            f"conjugated meridians miss unitarity by {unitarity:.3e}", residual=unitarity
        )
    identity_gap = max(
        abs(c + b * alpha_value) for b, c in zip(rep.aux.b_l, rep.aux.c_l)
    )
    if identity_gap > UNITARITY_TOL:
        raise UnitarityFailureError(
            f"c_l + b_l alpha deviates from zero by {identity_gap:.3e}", residual=identity_gap
        )

    conjugated = rep.model_copy(
        update={"T": T, "A": A, "meridians": meridians, "form": RepForm.SU2}
    )
    summary = verify_representation(conjugated, aug)
    summary.unitarity = unitarity
    conjugated.verification = summary
    logger.debug("Conjugated into SU(2), unitarity residual %.3e", unitarity)
    return conjugated


def build_sl2r(
    aug: Augmentation,
    diagram: KnotDiagram,
    witness: tuple[int, int, int] | None = None,
) -> RepresentationSet:
    """Real double-cover matrices for a real non-elliptic augmentation with a witness.

    Arcs are relabeled so the witness (i, j, k), with |eps_ij| > 2 and
    eps(i,j,k) > 2, sits at positions 1, 2, 3; d, a, alpha and every A-matrix
    entry are then real.

    Raises:
        NoWitnessError: The augmentation is elliptic, non-real, or has no witness
        RepresentationError: The resulting A-set is abelian
    """
    if not aug.is_real or aug.rank != 3:
        raise NoWitnessError("SL2R form needs a real rank-3 augmentation")
    if _elliptic(aug):
        raise NoWitnessError("elliptic augmentations have no SL2R witness")
    witness = witness or aug.witness_triple or find_witness(aug)
    if witness is None:
        raise NoWitnessError("no pair with |eps_ij| > 2 and triple with eps(i,j,k) > 2")

    head = list(witness)
    order = head + [label for label in range(1, aug.n + 1) if label not in head]
    rep = build_representation(aug, diagram, relabeling=order)
    imaginary = max(float(np.max(np.abs(A.imag))) for A in rep.A)
    if imaginary > REALITY_TOL:
        raise NoWitnessError(
            f"witness {witness} gives A-matrices with imaginary parts {imaginary:.3e}"
        )
    A = [A.real.astype(complex) for A in rep.A]
    if all(
        abs(commutator_trace(A[r], A[s]) - 2) <= REALITY_TOL
        for r in range(len(A))
        for s in range(r + 1, len(A))
    ):
        raise RepresentationError("SL2R matrices commute; representation is abelian")
    rep.A = A
    rep.form = RepForm.SL2R
    rep.verification.imaginary = imaginary
    return rep
