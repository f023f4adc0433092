"""Exception hierarchy for cordaug."""

from typing import Any


class CordaugError(Exception):
    """Base exception for all cordaug errors."""

    def __init__(self, message: str, knot: str | None = None, details: dict | None = None):
        """Initialize CordaugError.

        Args:
            message: Error message
            knot: Knot name the error refers to (e.g., '10_153')
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.knot = knot
        self.details = details or {}

    def __str__(self) -> str:
        """Return string representation."""
        if self.knot:
            return f"[{self.knot}] {self.message}"
        return self.message


# =============================================================================
# Diagram errors
# =============================================================================


class DiagramError(CordaugError):
    """Knot input could not be turned into a diagram."""


class MalformedCodeError(DiagramError):
    """Gauss code or sign string is malformed."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize MalformedCodeError.

        Args:
            message: Error message
            field: Input field that failed ('code' or 'signs')
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.field = field


class NotAKnotError(DiagramError):
    """Input describes a link (more than one component) or a broken arc cycle."""

    def __init__(
        self,
        message: str,
        components: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize NotAKnotError.

        Args:
            message: Error message
            components: Number of components found
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.components = components


class BadGeneratorError(DiagramError):
    """Braid word uses a generator index outside 1..N-1."""

    def __init__(
        self,
        message: str,
        generator: int | None = None,
        strands: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize BadGeneratorError.

        Args:
            message: Error message
            generator: Offending signed generator index
            strands: Strand count of the braid
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.generator = generator
        self.strands = strands


# =============================================================================
# Polynomial system errors
# =============================================================================


class PolynomialError(CordaugError):
    """Polynomial system construction or evaluation failed."""


class EliminationCycleError(PolynomialError):
    """A rewriting step refers back to a variable it defines."""


class MissingAssignmentError(PolynomialError):
    """Evaluation point does not assign every variable of the system."""

    def __init__(
        self,
        message: str,
        missing: list[str] | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize MissingAssignmentError.

        Args:
            message: Error message
            missing: Names of the unassigned variables
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.missing = missing or []


# =============================================================================
# Solver errors
# =============================================================================


class SolverError(CordaugError):
    """Numerical solving failed."""


class ZeroPolynomialError(SolverError):
    """Root finding was asked for the roots of the zero polynomial."""


class UnstabilizedError(SolverError):
    """Multi-start solution count did not stabilize within the start budget."""

    def __init__(
        self,
        message: str,
        starts: int | None = None,
        found: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize UnstabilizedError.

        Args:
            message: Error message
            starts: Number of starts consumed
            found: Number of certified points found so far
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.starts = starts
        self.found = found


class NumericalBreakdownError(SolverError):
    """Floating arithmetic produced non-finite values or lost all accuracy."""


class DivergedError(SolverError):
    """Newton refinement did not reach the target residual."""

    def __init__(
        self,
        message: str,
        residual: float | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize DivergedError.

        Args:
            message: Error message
            residual: Residual norm at the last iterate
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.residual = residual


class SingularJacobianError(SolverError):
    """Jacobian is rank-deficient at the refined point."""


# =============================================================================
# Classification errors
# =============================================================================


class ClassificationError(CordaugError):
    """Augmentation classification failed or does not apply."""


class RankAmbiguousError(ClassificationError):
    """Singular-value rank and principal-minor rank disagree."""

    def __init__(
        self,
        message: str,
        svd_rank: int | None = None,
        minor_rank: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize RankAmbiguousError.

        Args:
            message: Error message
            svd_rank: Rank from singular values
            minor_rank: Rank from principal minors
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.svd_rank = svd_rank
        self.minor_rank = minor_rank


class NotApplicableError(ClassificationError):
    """Elliptic classification asked for a point that is not real of rank three."""


class UndeterminedError(ClassificationError):
    """Answer depends on a solve that is positive-dimensional or unstabilized."""


class CountMismatchError(ClassificationError):
    """Rank-two count disagrees with (det - 1) / 2."""

    def __init__(
        self,
        message: str,
        expected: int | None = None,
        found: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize CountMismatchError.

        Args:
            message: Error message
            expected: Count implied by the determinant
            found: Count of rank-two points found
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.expected = expected
        self.found = found


# =============================================================================
# Representation errors
# =============================================================================


class RepresentationError(CordaugError):
    """Representation construction or verification failed."""


class NoNondegenerateMinorError(RepresentationError):
    """No 3x3 principal minor is nonzero (rank is not three)."""


class QuadraticDegenerateError(RepresentationError):
    """Leading coefficient of the b_l quadratic vanishes and no root fits."""


class DenominatorZeroError(RepresentationError):
    """A construction formula divides by zero (e.g. eps_12 = +-2)."""


class NoSolutionError(RepresentationError):
    """No trace-zero T satisfies the orthogonality system."""


class RelationViolationError(RepresentationError):
    """Meridian images violate Wirtinger relations."""

    def __init__(
        self,
        message: str,
        violations: list[tuple[int, float]] | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize RelationViolationError.

        Args:
            message: Error message
            violations: (crossing index, residual) pairs above tolerance
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.violations = violations or []


class NotEllipticError(RepresentationError):
    """SU(2) conjugation requested for a non-elliptic augmentation."""


class UnitarityFailureError(RepresentationError):
    """Conjugated meridian images are not unitary."""

    def __init__(
        self,
        message: str,
        residual: float | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize UnitarityFailureError.

        Args:
            message: Error message
            residual: Largest unitarity residual
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.residual = residual


class NoWitnessError(RepresentationError):
    """Real non-elliptic augmentation lacks a pair/triple witness."""


class RankTooHighError(RepresentationError):
    """Character coordinates requested for an augmentation of rank above three."""

    def __init__(
        self,
        message: str,
        rank: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize RankTooHighError.

        Args:
            message: Error message
            rank: Rank of the augmentation
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.rank = rank


class NoBraidDataError(RepresentationError):
    """Operation needs a diagram built from a braid word."""


# =============================================================================
# Lookup errors
# =============================================================================


class LookupFailure(CordaugError):
    """Requested knot, augmentation or form could not be resolved."""


class UnknownKnotError(LookupFailure):
    """Knot name not present in the knot table."""

    def __init__(
        self,
        message: str,
        table: str | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize UnknownKnotError.

        Args:
            message: Error message
            table: Path of the table that was searched
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.table = table


class IndexOutOfRangeError(LookupFailure):
    """Augmentation index outside the certified point list."""

    def __init__(
        self,
        message: str,
        index: int | None = None,
        available: int | None = None,
        knot: str | None = None,
        details: dict | None = None,
    ):
        """Initialize IndexOutOfRangeError.

        Args:
            message: Error message
            index: Requested index
            available: Number of augmentations available
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.index = index
        self.available = available


class FormNotApplicableError(LookupFailure):
    """Requested representation form does not apply to the augmentation."""

    def __init__(
        self,
        message: str,
        form: str | None = None,
        knot: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        """Initialize FormNotApplicableError.

        Args:
            message: Error message
            form: Requested form
            knot: Knot name
            details: Additional error details
        """
        super().__init__(message, knot, details)
        self.form = form
