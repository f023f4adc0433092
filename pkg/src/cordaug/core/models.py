"""Data models shared across cordaug modules.

Pydantic models carry everything that crosses a module boundary or ends up in a
report: diagrams, solution sets, augmentations, representations and run settings.
Complex scalars and 2x2 matrices serialize to JSON as ``[re, im]`` pairs.
"""

from enum import Enum
from itertools import combinations
from typing import Annotated, Any, Literal, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator, model_validator

# =============================================================================
# Complex scalar and matrix field types
# =============================================================================


def _to_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, dict) and "re" in value:
        return complex(float(value["re"]), float(value.get("im", 0.0)))
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    return complex(value)


def _complex_pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def _to_matrix(value: Any) -> np.ndarray:
    arr = np.asarray(value)
    if arr.shape == (2, 2, 2) and not np.iscomplexobj(arr):
        arr = arr[..., 0] + 1j * arr[..., 1]
    arr = np.asarray(arr, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    return arr


def _matrix_pairs(value: np.ndarray) -> list[list[list[float]]]:
    return [[_complex_pair(complex(entry)) for entry in row] for row in np.asarray(value)]


Complex = Annotated[
    complex,
    PlainValidator(_to_complex),
    PlainSerializer(_complex_pair, when_used="json"),
]
"""Complex number that serializes to ``[re, im]`` in JSON."""

Matrix2 = Annotated[
    np.ndarray,
    PlainValidator(_to_matrix),
    PlainSerializer(_matrix_pairs, when_used="json"),
]
"""2x2 complex matrix that serializes to nested ``[re, im]`` pairs in JSON."""


# =============================================================================
# Enums
# =============================================================================


class DimFlag(str, Enum):
    """Dimension verdict for a solved augmentation variety."""

    ZERO_DIMENSIONAL = "zero_dimensional"
    POSITIVE_DIMENSIONAL = "positive_dimensional"
    UNDETERMINED = "undetermined"


class RepForm(str, Enum):
    """Normal form of a constructed representation."""

    GENERIC_SL2C = "generic_sl2c"
    SU2 = "su2"
    SL2R = "sl2r"


class OutputFormat(str, Enum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class EliminationStrategy(str, Enum):
    """Seed selection for rewriting elimination."""

    AUTO = "auto"
    BRAID = "braid"
    GREEDY = "greedy"
    NONE = "none"


# =============================================================================
# Pair variables
# =============================================================================


class PairVar(NamedTuple):
    """Cord variable x_rs for arcs r < s."""

    r: int
    s: int

    @classmethod
    def of(cls, a: int, b: int) -> "PairVar":
        """Build the normalized variable for an unordered pair of distinct arcs."""
        if a == b:
            raise ValueError(f"x_{a}{a} is the constant 2, not a variable")
        return cls(min(a, b), max(a, b))

    @property
    def name(self) -> str:
        """Symbol name used in polynomial rings."""
        return f"x_{self.r}_{self.s}"


def pair_list(n: int) -> list[PairVar]:
    """All pair variables of an n-arc diagram in (r, s) lexicographic order."""
    return [PairVar(r, s) for r, s in combinations(range(1, n + 1), 2)]


def triple_list(n: int) -> list[tuple[int, int, int]]:
    """All increasing arc triples of an n-arc diagram."""
    return list(combinations(range(1, n + 1), 3))


# =============================================================================
# Diagrams
# =============================================================================


class Crossing(BaseModel):
    """Signed crossing (i, j, k): arc i passes over, arc j enters and arc k leaves below."""

    model_config = ConfigDict(frozen=True)

    over: int = Field(ge=1, description="Over arc label")
    under_in: int = Field(ge=1, description="Under arc entering the crossing")
    under_out: int = Field(ge=1, description="Under arc leaving the crossing")
    sign: Literal[1, -1] = Field(description="Writhe sign of the crossing")


class WirtingerRelation(NamedTuple):
    """Relation m_j m_i^eps = m_i^eps m_k at one crossing."""

    j: int
    i: int
    k: int
    epsilon: int


class BraidWord(BaseModel):
    """Braid word in the Artin generators and its strand count."""

    model_config = ConfigDict(frozen=True)

    word: list[int] = Field(default_factory=list, description="Signed generator indices")
    strands: int = Field(ge=1, description="Number of strands N")


class KnotDiagram(BaseModel):
    """Oriented knot diagram with arcs 1..n and one crossing triple per crossing."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Crossing count (equals arc count)")
    crossings: list[Crossing] = Field(default_factory=list, description="Crossing triples")
    passages: list[int] = Field(
        default_factory=list,
        description="Traversal as signed crossing numbers (+c over, -c under)",
    )
    name: str | None = Field(default=None, description="Knot name (e.g., '5_2')")
    braid_origin: BraidWord | None = Field(default=None, description="Source braid, if any")

    @model_validator(mode="after")
    def _check_arcs(self) -> "KnotDiagram":
        # Imported lazily: diagram errors live with the other exceptions.
        from cordaug.core.exceptions import MalformedCodeError, NotAKnotError

        if len(self.crossings) != self.n:
            raise MalformedCodeError(
                f"{len(self.crossings)} crossings listed for n={self.n}", knot=self.name
            )
        successor: dict[int, int] = {}
        entered: set[int] = set()
        for crossing in self.crossings:
            labels = (crossing.over, crossing.under_in, crossing.under_out)
            if any(label > self.n for label in labels):
                raise MalformedCodeError(f"arc label out of range in {crossing}", knot=self.name)
            if crossing.under_in == crossing.under_out and self.n != 1:
                raise MalformedCodeError(
                    f"under arcs coincide outside a 1-crossing kink: {crossing}", knot=self.name
                )
            if crossing.under_in in successor or crossing.under_out in entered:
                raise MalformedCodeError(
                    f"arc ends or starts twice at {crossing}", knot=self.name
                )
            successor[crossing.under_in] = crossing.under_out
            entered.add(crossing.under_out)
        if self.n:
            arc, length = 1, 0
            while True:
                arc = successor[arc]
                length += 1
                if arc == 1:
                    break
            if length != self.n:
                raise NotAKnotError(
                    f"under-arc cycle has length {length}, expected {self.n}",
                    components=None,
                    knot=self.name,
                )
        if self.passages and len(self.passages) != 2 * self.n:
            raise MalformedCodeError(
                f"traversal has {len(self.passages)} passes, expected {2 * self.n}",
                knot=self.name,
            )
        return self

    @property
    def arcs(self) -> list[int]:
        """Arc labels 1..n."""
        return list(range(1, self.n + 1))

    def to_gauss(self) -> tuple[str, str]:
        """Canonical (code, signs) export; parse_gauss inverts it for Gauss-built diagrams."""
        code = ",".join(str(p) for p in self.passages)
        signs = "".join("+" if c.sign > 0 else "-" for c in self.crossings)
        return code, signs


# =============================================================================
# Solutions and augmentations
# =============================================================================


class SolutionPoint(BaseModel):
    """Certified point of the augmentation variety."""

    coordinates: list[Complex] = Field(description="Values of the core variables")
    values: list[Complex] = Field(description="Values of every pair variable, (r,s)-ordered")
    residual_norm: float = Field(description="Max residual over the full cord system")
    multiplicity_flag: bool = Field(default=False, description="Jacobian rank-deficient here")


class SolutionSet(BaseModel):
    """All certified isolated points found for one system."""

    n: int = Field(description="Arc count of the diagram")
    core_vars: list[PairVar] = Field(default_factory=list, description="Core variables")
    points: list[SolutionPoint] = Field(default_factory=list, description="Certified points")
    dim_flag: DimFlag = Field(default=DimFlag.UNDETERMINED, description="Dimension verdict")
    seed: int = Field(default=1, description="Seed of the start generator")
    precision: int = Field(default=166, description="Refinement precision in bits")
    starts: int = Field(default=0, description="Number of Newton starts consumed")
    backend: str = Field(default="", description="Solver backend that produced the points")


class Augmentation(BaseModel):
    """Reflective augmentation: values eps_rs on all arc pairs."""

    n: int = Field(ge=0, description="Arc count")
    values: list[Complex] = Field(description="eps_rs for r<s in lexicographic order")
    rank: int = Field(default=1, ge=1, description="Rank of the cord matrix")
    is_real: bool = Field(default=True, description="All values real within tolerance")
    is_elliptic: bool | None = Field(default=None, description="Defined for real rank 3 only")
    witness_triple: tuple[int, int, int] | None = Field(
        default=None, description="(i,j,k) with |eps_ij|>2 and eps(i,j,k)>2"
    )
    residual_norm: float = Field(default=0.0, description="Cord system residual")
    multiplicity_flag: bool = Field(default=False, description="Singular Jacobian at the point")
    rank_ambiguous: bool = Field(default=False, description="Rank criteria disagreed")

    def value(self, r: int, s: int) -> complex:
        """eps_rs with eps_rr = 2 and eps_sr = eps_rs."""
        if r == s:
            return 2.0 + 0.0j
        a, b = min(r, s), max(r, s)
        # position of (a, b) in combinations(range(1, n + 1), 2)
        index = (a - 1) * (2 * self.n - a) // 2 + (b - a - 1)
        return complex(self.values[index])


class RankCounts(BaseModel):
    """Augmentation tallies by rank and type."""

    rank1: int = 0
    rank2: int = 0
    rank3_elliptic_real: int = 0
    rank3_nonelliptic_real: int = 0
    rank3_nonreal: int = 0
    rank_ge4: int = 0


class KnotReport(BaseModel):
    """Analysis summary for one knot."""

    model_config = ConfigDict(extra="allow")

    name: str = Field(description="Knot name or input description")
    det: int = Field(description="Knot determinant |Delta(-1)|")
    counts: RankCounts = Field(default_factory=RankCounts, description="Tallies")
    su2_simple: bool | None = Field(default=None, description="No elliptic augmentation")
    orderability_note: str = Field(default="", description="Textual orderability flag")
    dim_flag: DimFlag = Field(default=DimFlag.UNDETERMINED, description="Dimension verdict")
    metabelian_check: bool | None = Field(default=None, description="#rank2 == (det-1)/2")
    det_one_check: bool | None = Field(default=None, description="det 1 consequences hold")
    unknot_certified: bool = Field(default=False, description="Variety is the rank-1 point")
    core_vars: int = Field(default=0, description="Core variables after elimination")
    seed: int = Field(default=1, description="Solver seed")
    precision_digits: int = Field(default=50, description="Refinement precision")
    warnings: list[str] = Field(default_factory=list, description="Diagnostics")
    augmentations: list[Augmentation] = Field(default_factory=list, description="Sorted points")


# =============================================================================
# Representations and characters
# =============================================================================


class ConstructionAux(BaseModel):
    """Intermediate quantities of the A-matrix construction (relabeled indices)."""

    d: Complex
    a: Complex
    alpha: Complex
    a_l: list[Complex] = Field(default_factory=list)
    b_l: list[Complex] = Field(default_factory=list)
    c_l: list[Complex] = Field(default_factory=list)
    b_discriminant: list[Complex] = Field(
        default_factory=list, description="Discriminant of det(A_l)=1 in b_l (zero at rank 3)"
    )
    shifted_discriminant: list[Complex] = Field(
        default_factory=list, description="(c_l - b_l alpha)^2 + 4 alpha a_l (eps_1l - a_l)"
    )


class VerificationSummary(BaseModel):
    """Largest residuals seen while verifying a representation."""

    square: float = Field(default=0.0, description="max ||(T A_i)^2 + Id||")
    trace: float = Field(default=0.0, description="max |tr(A_r A_s^-1) - eps_rs|")
    relation: float = Field(default=0.0, description="max Wirtinger relation residual")
    determinant: float = Field(default=0.0, description="max |det - 1|")
    unitarity: float | None = Field(default=None, description="max ||U U* - Id||")
    imaginary: float | None = Field(default=None, description="max |Im| of entries")


class RepresentationSet(BaseModel):
    """Trace-free representation built from a rank-3 augmentation."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    T: Matrix2 | None = Field(default=None, description="Trace-zero conjugator")
    A: list[Matrix2] = Field(default_factory=list, description="A_1..A_n by original label")
    meridians: list[Matrix2] = Field(default_factory=list, description="Images of m_1..m_n")
    form: RepForm = Field(default=RepForm.GENERIC_SL2C, description="Normal form")
    relabeling: list[int] = Field(
        default_factory=list, description="Original labels in construction order"
    )
    aux: ConstructionAux | None = Field(default=None, description="Construction quantities")
    verification: VerificationSummary = Field(default_factory=VerificationSummary)


class CharacterPoint(BaseModel):
    """Trace-free character coordinates (x_ab, x_abc)."""

    n: int = Field(ge=0)
    x_pair: list[Complex] = Field(description="x_ab for a<b, lexicographic")
    x_triple: list[Complex] = Field(description="x_abc for a<b<c, lexicographic")

    def pair(self, a: int, b: int) -> complex:
        """x_ab with x_aa = 2 and symmetry."""
        if a == b:
            return 2.0 + 0.0j
        r, s = min(a, b), max(a, b)
        return complex(self.x_pair[(r - 1) * (2 * self.n - r) // 2 + (s - r - 1)])

    def triple(self, a: int, b: int, c: int) -> complex:
        """x_abc with sign(sigma) antisymmetry; zero on repeated indices."""
        if len({a, b, c}) < 3:
            return 0.0 + 0.0j
        labels = [a, b, c]
        inversions = sum(1 for p in range(3) for q in range(p + 1, 3) if labels[p] > labels[q])
        key = tuple(sorted(labels))
        value = complex(self.x_triple[_triple_index(key, self.n)])
        return -value if inversions % 2 else value


def _triple_index(key: tuple[int, ...], n: int) -> int:
    a, b, c = key
    index = 0
    for x in range(1, a):
        index += (n - x) * (n - x - 1) // 2
    for y in range(a + 1, b):
        index += n - y
    return index + (c - b - 1)


# =============================================================================
# Settings
# =============================================================================


class SolverConfig(BaseModel):
    """Numerical settings of the solve stage."""

    seed: int = Field(default=1, description="Seed of the start generator")
    precision_digits: int = Field(default=50, ge=16, description="Refinement digits")
    max_starts: int = Field(default=6000, ge=1, description="Start budget")
    certify_tol: float = Field(default=1e-10, gt=0, description="Full-system residual bound")
    dedup_tol: float = Field(default=1e-6, gt=0, description="Max-norm merge distance")
    box: float = Field(default=8.0, gt=0, description="Start box half-width")
    batch_per_var: int = Field(default=50, ge=1, description="Starts per batch per variable")
    stable_batches: int = Field(default=3, ge=1, description="Empty batches to stop")
    newton_max_iter: int = Field(default=60, ge=1, description="Newton iterations per start")
    resultant_degree_limit: int = Field(default=64, ge=1, description="Resultant size guard")


class RunConfig(BaseModel):
    """Settings of one CLI run."""

    name: str | None = Field(default=None, description="Knot name looked up in the table")
    gauss: str | None = Field(default=None, description="Gauss code")
    signs: str | None = Field(default=None, description="Crossing signs")
    braid: list[int] | None = Field(default=None, description="Braid word")
    strands: int | None = Field(default=None, description="Braid strand count")
    solver: SolverConfig = Field(default_factory=SolverConfig)
    output_format: OutputFormat = Field(default=OutputFormat.TEXT)
    jobs: int = Field(default=1, ge=1, description="Parallel knots for table runs")
    elimination: EliminationStrategy = Field(default=EliminationStrategy.AUTO)
    table: str | None = Field(default=None, description="Knot table path")
