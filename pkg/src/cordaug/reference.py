"""Published counts of real rank-3 augmentations and worked example data.

Counts cover every prime 3-bridge knot with 8 to 10 crossings. Knots with 8 or
9 crossings have no non-elliptic points. Three alternating 10-crossing knots
have a positive-dimensional variety and carry no counts.
"""

from fractions import Fraction

import numpy as np
from pydantic import BaseModel, Field

from cordaug.core.models import DimFlag

_EIGHT_NINE = {
    "8_5": 1, "8_10": 1, "8_15": 1, "8_16": 0, "8_17": 0, "8_18": 0, "8_19": 1,
    "8_20": 1, "8_21": 1, "9_16": 1, "9_22": 2, "9_24": 1, "9_25": 2, "9_28": 1,
    "9_29": 0, "9_30": 2, "9_32": 0, "9_33": 0, "9_34": 1, "9_35": 1, "9_36": 2,
    "9_37": 1, "9_38": 0, "9_39": 2, "9_40": 3, "9_41": 2, "9_42": 2, "9_43": 2,
    "9_44": 2, "9_45": 2, "9_46": 1, "9_47": 1, "9_48": 1, "9_49": 1,
}  # fmt: skip

# (elliptic, non-elliptic)
_TEN_NON_ALTERNATING = {
    124: (2, 0), 125: (2, 0), 126: (2, 0), 127: (2, 0), 128: (2, 1), 129: (2, 1),
    130: (2, 1), 131: (2, 1), 132: (2, 1), 133: (2, 1), 134: (2, 1), 135: (2, 1),
    136: (3, 1), 137: (3, 1), 138: (3, 1), 139: (2, 1), 140: (2, 1), 141: (2, 1),
    142: (2, 1), 143: (2, 1), 144: (2, 1), 145: (3, 1), 146: (3, 1), 147: (3, 1),
    148: (2, 0), 149: (2, 0), 150: (2, 1), 151: (2, 1), 152: (4, 0), 153: (4, 1),
    154: (4, 2), 155: (2, 0), 156: (3, 0), 157: (3, 0), 158: (2, 0), 159: (3, 0),
    160: (3, 0), 161: (2, 0), 162: (1, 0), 163: (2, 0), 164: (4, 0), 165: (2, 0),
}  # fmt: skip

_TEN_ALTERNATING = {
    46: (2, 0), 47: (2, 0), 48: (2, 0), 49: (2, 0), 50: (2, 1), 51: (2, 1),
    52: (2, 1), 53: (2, 1), 54: (2, 1), 55: (2, 1), 56: (2, 1), 57: (2, 1),
    58: (3, 1), 59: (3, 1), 60: (3, 1), 61: (2, 1), 62: (2, 1), 63: (2, 1),
    64: (2, 1), 65: (2, 1), 66: (2, 1), 67: (3, 1), 68: (3, 1), 69: (3, 1),
    70: (2, 0), 71: (2, 0), 72: (2, 0), 73: (2, 0), 74: (1, 0), 75: (1, 0),
    76: (1, 0), 77: (1, 0), 78: (1, 0), 79: (4, 0), 80: (4, 1), 81: (4, 2),
    82: (1, 0), 83: (0, 0), 84: (1, 0), 85: (1, 0), 86: (0, 0), 87: (1, 0),
    88: (0, 0), 89: (0, 0), 90: (2, 0), 91: (0, 0), 92: (0, 0), 93: (2, 0),
    94: (0, 0), 95: (0, 0), 96: (0, 0), 97: (0, 0), 98: None, 99: None,
    100: (2, 0), 101: (3, 0), 102: (2, 1), 103: (3, 0), 104: (3, 0), 105: (4, 0),
    106: (3, 0), 107: (2, 2), 108: (3, 0), 109: (0, 2), 110: (3, 1), 111: (2, 0),
    112: (3, 0), 113: (3, 0), 114: (2, 0), 115: (2, 0), 116: (1, 0), 117: (3, 0),
    118: (2, 0), 119: (4, 0), 120: (3, 0), 121: (3, 1), 122: (3, 0), 123: None,
}  # fmt: skip

SU2_SIMPLE = [
    "8_16", "8_17", "8_18", "9_29", "9_32", "9_33", "9_38", "10_83", "10_86",
    "10_88", "10_89", "10_91", "10_92", "10_94", "10_95", "10_96", "10_97", "10_109",
]  # fmt: skip
"""3-bridge knots up to 10 crossings with no elliptic augmentation."""

# Dense integer coefficients, highest degree first.
TWISTED_MINUS_ONE = [1, 0, -8, -3, 21, 14, -14, -18, -5, 2, 1]
"""Degree 10: four real roots in [-2, 2], the other six non-real."""

TWISTED_ONE = [1, 1, -7, -2, 7, 2, -1]
"""Degree 6: all roots real, the largest above 2."""

ROOTS_F = [1, 1, -2, -1]
"""x^3 + x^2 - 2x - 1: eps_12 values of the rank-2 points of 5_2."""

ROOTS_G = [1, -2, -1, 1]
"""x^3 - 2x^2 - x + 1, whose roots are those of ROOTS_F shifted by one."""


class ReferenceRow(BaseModel):
    """Published tally for one knot."""

    name: str = Field(description="Knot name (e.g., '10_153')")
    table: str = Field(description="'8-9', '10-nonalternating' or '10-alternating'")
    elliptic: int | None = Field(default=None, description="Real elliptic rank-3 points")
    non_elliptic: int | None = Field(default=None, description="Real non-elliptic rank-3 points")
    dim_flag: DimFlag = Field(default=DimFlag.ZERO_DIMENSIONAL, description="Variety dimension")

    @property
    def su2_simple(self) -> bool | None:
        """SU(2)-simplicity implied by the row; None for positive-dimensional rows."""
        if self.elliptic is None:
            return None
        return self.elliptic == 0


def _build_rows() -> dict[str, ReferenceRow]:
    rows = {
        name: ReferenceRow(name=name, table="8-9", elliptic=count, non_elliptic=0)
        for name, count in _EIGHT_NINE.items()
    }
    for table, source in (
        ("10-nonalternating", _TEN_NON_ALTERNATING),
        ("10-alternating", _TEN_ALTERNATING),
    ):
        for index, counts in source.items():
            name = f"10_{index}"
            if counts is None:
                rows[name] = ReferenceRow(
                    name=name, table=table, dim_flag=DimFlag.POSITIVE_DIMENSIONAL
                )
            else:
                rows[name] = ReferenceRow(
                    name=name, table=table, elliptic=counts[0], non_elliptic=counts[1]
                )
    return rows


REFERENCE = _build_rows()


def expected_counts(name: str) -> ReferenceRow | None:
    """Published row for ``name`` or None when the knot is not tabulated."""
    return REFERENCE.get(name)


def real_roots(coefficients: list[int]) -> list[float]:
    """Sorted real roots of an integer polynomial (all roots must be real)."""
    roots = np.roots(np.array(coefficients, dtype=float))
    return sorted(float(r.real) for r in roots)


def det_one_nonelliptic_matrix() -> np.ndarray:
    """Cord matrix of the real non-elliptic rank-3 augmentation of 10_153.

    Entries come from the ordered roots x1 < x2 < x3 of x^3 + x^2 - 2x - 1 and
    y1 < y2 < y3 of x^3 - 2x^2 - x + 1; eps_12 = x2.
    """
    x1, x2, x3 = real_roots(ROOTS_F)
    y3 = real_roots(ROOTS_G)[2]
    upper = [
        [x2, x2, x3, x1, -x1, -2, 1, 1, -1],
        [x1, x3, x3, -x3, -x2, -y3, -x1, x1],
        [x1, x2, -x2, -x2, -x1, -y3, y3],
        [x2, -x2, -x3, -1, y3, -y3],
        [-2, -x1, x1, 0, 0],
        [x1, -x1, 0, 0],
        [-1, -1, 1],
        [-1, 1],
        [-2],
    ]
    matrix = np.full((10, 10), 2.0)
    for row, entries in enumerate(upper):
        matrix[row, row + 1 :] = entries
        matrix[row + 1 :, row] = entries
    return matrix


def twisted_polynomials() -> dict[str, list[Fraction]]:
    """Univariate polynomials of the twisted-family examples, keyed by twist."""
    return {
        "-1": [Fraction(c) for c in TWISTED_MINUS_ONE],
        "1": [Fraction(c) for c in TWISTED_ONE],
    }
