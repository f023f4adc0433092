"""Tests for Gauss code ingestion."""

import pytest

from cordaug.core.exceptions import MalformedCodeError
from cordaug.core.models import Crossing
from cordaug.diagram.gauss import parse_gauss, parse_signs


class TestParseSigns:
    """Tests for sign strings."""

    def test_compact(self) -> None:
        """Test a compact sign string."""
        assert parse_signs("+-+", 3) == [1, -1, 1]

    def test_separated(self) -> None:
        """Test comma and space separated signs."""
        assert parse_signs("+, -, +", 3) == [1, -1, 1]

    def test_invalid_character(self) -> None:
        """Test that unknown characters are rejected."""
        with pytest.raises(MalformedCodeError) as exc_info:
            parse_signs("+x+", 3)
        assert exc_info.value.field == "signs"

    def test_wrong_length(self) -> None:
        """Test that the sign count must match the crossing count."""
        with pytest.raises(MalformedCodeError):
            parse_signs("++", 3)


class TestParseGauss:
    """Tests for parse_gauss."""

    def test_trefoil_crossings(self) -> None:
        """Test arc labels of the trefoil."""
        diagram = parse_gauss("1,-2,3,-1,2,-3", "---", name="3_1")
        assert diagram.n == 3
        assert diagram.crossings == [
            Crossing(over=1, under_in=2, under_out=3, sign=-1),
            Crossing(over=3, under_in=1, under_out=2, sign=-1),
            Crossing(over=2, under_in=3, under_out=1, sign=-1),
        ]
        assert diagram.name == "3_1"

    def test_renumbers_crossings(self) -> None:
        """Test that sparse crossing ids are renumbered by increasing id."""
        sparse = parse_gauss("10 -20 30 -10 20 -30", "---")
        dense = parse_gauss("1,-2,3,-1,2,-3", "---")
        assert sparse.crossings == dense.crossings

    def test_brackets_and_unicode_minus(self) -> None:
        """Test bracketed codes with typographic minus signs."""
        diagram = parse_gauss("[1, −2, 3, −1, 2, −3]", "−−−")
        assert diagram.n == 3

    def test_one_crossing_kink(self) -> None:
        """Test the one-crossing unknot diagram."""
        diagram = parse_gauss("1,-1", "+")
        assert diagram.crossings == [Crossing(over=1, under_in=1, under_out=1, sign=1)]

    def test_round_trip(self, figure_eight) -> None:
        """Test that to_gauss output parses back to the same diagram."""
        code, signs = figure_eight.to_gauss()
        assert parse_gauss(code, signs).crossings == figure_eight.crossings

    @pytest.mark.parametrize(
        "code",
        [
            "",
            "1,-2,3,-1,2",
            "1,-1,0,0",
            "1,-2,1,-2",
            "1,2,-1,-2,3,-3,x,1",
        ],
    )
    def test_malformed_code(self, code: str) -> None:
        """Test that malformed codes raise MalformedCodeError."""
        with pytest.raises(MalformedCodeError):
            parse_gauss(code, "++")

    def test_repeated_pass_details(self) -> None:
        """Test that a crossing passed over twice is reported."""
        with pytest.raises(MalformedCodeError) as exc_info:
            parse_gauss("1,-2,1,-2", "++")
        assert exc_info.value.field == "code"
        assert exc_info.value.details["crossing"] in (1, 2)
