"""Knot report assembly: tallies, SU(2)-simplicity and cross-checks."""

import logging
from typing import Sequence

from cordaug.core.exceptions import CountMismatchError, UndeterminedError
from cordaug.core.models import Augmentation, DimFlag, KnotReport, RankCounts, SolutionSet

logger = logging.getLogger(__name__)

NOTE_CIRCULAR = (
    "real non-elliptic rank-3 augmentation: the branched double cover group has a "
    "non-abelian SL2R representation (circularly orderable)"
)
NOTE_LEFT = (
    "real non-elliptic rank-3 augmentation and det 1: the branched double cover group "
    "is left-orderable"
)


def count_ranks(augmentations: Sequence[Augmentation]) -> RankCounts:
    """Tally augmentations by rank, reality and elliptic type."""
    counts = RankCounts()
    for aug in augmentations:
        if aug.rank == 1:
            counts.rank1 += 1
        elif aug.rank == 2:
            counts.rank2 += 1
        elif aug.rank == 3 and not aug.is_real:
            counts.rank3_nonreal += 1
        elif aug.rank == 3 and aug.is_elliptic:
            counts.rank3_elliptic_real += 1
        elif aug.rank == 3:
            counts.rank3_nonelliptic_real += 1
        else:
            counts.rank_ge4 += 1
    return counts


def su2_simple(counts: RankCounts, dim_flag: DimFlag) -> bool:
    """A knot is SU(2)-simple iff it has no elliptic augmentation.

    Raises:
        UndeterminedError: The variety is positive-dimensional or the solve did not stabilize
    """
    if dim_flag != DimFlag.ZERO_DIMENSIONAL:
        raise UndeterminedError(f"SU(2)-simplicity is undetermined for a {dim_flag.value} solve")
    return counts.rank3_elliptic_real == 0


def crosscheck_rank2(
    augmentations: Sequence[Augmentation], det: int, strict: bool = False
) -> bool:
    """Compare the rank-2 count with (det - 1) / 2, the metabelian character count.

    Raises:
        CountMismatchError: Counts differ and ``strict`` is set
    """
    found = sum(1 for aug in augmentations if aug.rank == 2)
    expected = (det - 1) // 2
    if found == expected:
        return True
    if strict:
        raise CountMismatchError(
            f"{found} rank-2 augmentations, determinant {det} implies {expected}",
            expected=expected,
            found=found,
        )
    return False


def det_one_check(counts: RankCounts, det: int) -> bool | None:
    """For det 1: no rank-2 points and at least one of rank 3. None otherwise."""
    if det != 1:
        return None
    rank3 = counts.rank3_elliptic_real + counts.rank3_nonelliptic_real + counts.rank3_nonreal
    return counts.rank2 == 0 and rank3 > 0


def orderability_note(counts: RankCounts, det: int) -> str:
    """Textual orderability flag; empty without a real non-elliptic rank-3 point."""
    if counts.rank3_nonelliptic_real == 0:
        return ""
    return NOTE_LEFT if det == 1 else NOTE_CIRCULAR


def rank_diagnostics(augmentations: Sequence[Augmentation], name: str) -> list[str]:
    """Warnings for high-rank and rank-ambiguous points."""
    warnings = []
    top = max((aug.rank for aug in augmentations), default=0)
    if top >= 4:
        message = f"augmentation of rank {top} found"
        if top >= 5:
            message += "; the map from the cord ring to characters is not injective"
        logger.warning("%s: %s", name, message)
        warnings.append(message)
    ambiguous = sum(1 for aug in augmentations if aug.rank_ambiguous)
    if ambiguous:
        message = f"{ambiguous} points with ambiguous rank"
        logger.warning("%s: %s", name, message)
        warnings.append(message)
    return warnings


def build_report(
    name: str,
    det: int,
    augmentations: Sequence[Augmentation],
    solutions: SolutionSet,
    core_vars: int = 0,
    precision_digits: int = 50,
) -> KnotReport:
    """Assemble the report of one knot from its classified augmentations."""
    counts = count_ranks(augmentations)
    dim_flag = solutions.dim_flag
    report = KnotReport(
        name=name,
        det=det,
        counts=counts,
        orderability_note=orderability_note(counts, det),
        dim_flag=dim_flag,
        core_vars=core_vars,
        seed=solutions.seed,
        precision_digits=precision_digits,
        warnings=rank_diagnostics(augmentations, name),
        augmentations=list(augmentations),
    )
    if dim_flag != DimFlag.ZERO_DIMENSIONAL:
        report.warnings.append(f"variety is {dim_flag.value}; counts are partial")
        return report

    report.su2_simple = su2_simple(counts, dim_flag)
    report.metabelian_check = crosscheck_rank2(augmentations, det)
    if not report.metabelian_check:
        message = f"{counts.rank2} rank-2 augmentations but determinant {det}"
        logger.warning("%s: %s", name, message)
        report.warnings.append(message)
    report.unknot_certified = counts.rank1 == 1 and len(augmentations) == 1
    # det-one consequences only concern cord rings that differ from the unknot's
    report.det_one_check = None if report.unknot_certified else det_one_check(counts, det)
    if counts.rank1 != 1:
        message = f"expected exactly one rank-1 point, found {counts.rank1}"
        logger.warning("%s: %s", name, message)
        report.warnings.append(message)
    return report
