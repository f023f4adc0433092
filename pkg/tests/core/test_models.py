"""Tests for core data models."""

import json
from itertools import combinations

import numpy as np
import pytest

from cordaug.core.exceptions import MalformedCodeError
from cordaug.core.models import (
    Augmentation,
    CharacterPoint,
    Crossing,
    DimFlag,
    KnotDiagram,
    KnotReport,
    PairVar,
    RankCounts,
    RepresentationSet,
    RunConfig,
    SolverConfig,
    pair_list,
    triple_list,
)


class TestPairVar:
    """Tests for PairVar."""

    def test_of_normalizes_order(self) -> None:
        """Test that PairVar.of sorts its arcs."""
        assert PairVar.of(3, 1) == PairVar(1, 3)
        assert PairVar.of(3, 1) == (1, 3)

    def test_of_rejects_diagonal(self) -> None:
        """Test that x_aa is not a variable."""
        with pytest.raises(ValueError):
            PairVar.of(2, 2)

    def test_name(self) -> None:
        """Test the ring symbol name."""
        assert PairVar(1, 3).name == "x_1_3"

    def test_pair_list_order(self) -> None:
        """Test lexicographic pair order."""
        assert pair_list(4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        assert pair_list(1) == []

    def test_triple_list(self) -> None:
        """Test increasing triples."""
        assert triple_list(4) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


class TestAugmentation:
    """Tests for the Augmentation model."""

    def test_value_indexing(self) -> None:
        """Test that value(r, s) reads the lexicographic pair slot."""
        n = 5
        values = [complex(10 * r + s) for r, s in pair_list(n)]
        aug = Augmentation(n=n, values=values)
        for r, s in pair_list(n):
            assert aug.value(r, s) == 10 * r + s
            assert aug.value(s, r) == 10 * r + s

    def test_value_diagonal(self) -> None:
        """Test that eps_rr is 2."""
        aug = Augmentation(n=3, values=[1, 1, 1])
        assert aug.value(2, 2) == 2

    def test_defaults(self) -> None:
        """Test Augmentation defaults."""
        aug = Augmentation(n=2, values=[2])
        assert aug.rank == 1
        assert aug.is_real is True
        assert aug.is_elliptic is None
        assert aug.witness_triple is None
        assert aug.rank_ambiguous is False

    def test_complex_json_pairs(self) -> None:
        """Test that complex values serialize to [re, im] pairs."""
        aug = Augmentation(n=2, values=[1 + 2j])
        data = aug.model_dump(mode="json")
        assert data["values"] == [[1.0, 2.0]]

    def test_complex_from_pairs(self) -> None:
        """Test that [re, im] pairs validate back to complex numbers."""
        aug = Augmentation.model_validate({"n": 2, "values": [[0.5, -1.0]]})
        assert aug.values[0] == 0.5 - 1j


class TestCharacterPoint:
    """Tests for CharacterPoint accessors."""

    def test_triple_index(self) -> None:
        """Test that triple(a, b, c) reads the lexicographic triple slot."""
        n = 5
        triples = list(combinations(range(1, n + 1), 3))
        point = CharacterPoint(
            n=n,
            x_pair=[0] * len(pair_list(n)),
            x_triple=[complex(100 * a + 10 * b + c) for a, b, c in triples],
        )
        for a, b, c in triples:
            assert point.triple(a, b, c) == 100 * a + 10 * b + c

    def test_triple_antisymmetry(self) -> None:
        """Test sign changes under odd permutations and zero on repeats."""
        point = CharacterPoint(n=3, x_pair=[1, 1, 1], x_triple=[3j])
        assert point.triple(1, 2, 3) == 3j
        assert point.triple(2, 1, 3) == -3j
        assert point.triple(2, 3, 1) == 3j
        assert point.triple(1, 1, 3) == 0

    def test_pair_symmetry(self) -> None:
        """Test x_ab symmetry and x_aa = 2."""
        point = CharacterPoint(n=3, x_pair=[-1, 0.5, 3], x_triple=[0])
        assert point.pair(3, 1) == 0.5
        assert point.pair(2, 2) == 2


class TestKnotDiagram:
    """Tests for KnotDiagram validation."""

    def test_crossing_count_mismatch(self) -> None:
        """Test that n must match the crossing list."""
        with pytest.raises(MalformedCodeError):
            KnotDiagram(n=2, crossings=[Crossing(over=1, under_in=1, under_out=1, sign=1)])

    def test_label_out_of_range(self) -> None:
        """Test that arc labels above n are rejected."""
        with pytest.raises(MalformedCodeError):
            KnotDiagram(n=1, crossings=[Crossing(over=2, under_in=1, under_out=1, sign=1)])

    def test_arcs(self, trefoil: KnotDiagram) -> None:
        """Test the arc label list."""
        assert trefoil.arcs == [1, 2, 3]

    def test_to_gauss(self, trefoil: KnotDiagram) -> None:
        """Test canonical Gauss export."""
        assert trefoil.to_gauss() == ("1,-2,3,-1,2,-3", "---")


class TestReports:
    """Tests for report and settings models."""

    def test_report_json_round_trip(self, sample_report: KnotReport) -> None:
        """Test that a report survives JSON serialization."""
        sample_report.augmentations = [Augmentation(n=3, values=[-1, -1, -1], rank=2)]
        restored = KnotReport.model_validate_json(sample_report.model_dump_json())
        assert restored == sample_report

    def test_report_defaults(self) -> None:
        """Test KnotReport defaults."""
        report = KnotReport(name="3_1", det=3)
        assert report.counts == RankCounts()
        assert report.dim_flag == DimFlag.UNDETERMINED
        assert report.su2_simple is None
        assert report.warnings == []

    def test_report_keeps_extra_fields(self) -> None:
        """Test that unknown fields are kept and serialized."""
        assert KnotReport.model_config["extra"] == "allow"
        report = KnotReport(name="3_1", det=3, source="bundled")
        assert report.source == "bundled"
        assert json.loads(report.model_dump_json())["source"] == "bundled"

    def test_representation_matrix_json(self) -> None:
        """Test that 2x2 matrices serialize as nested [re, im] pairs."""
        rep = RepresentationSet(T=np.array([[0, 1j], [1j, 0]]))
        data = json.loads(rep.model_dump_json())
        assert data["T"] == [[[0.0, 0.0], [0.0, 1.0]], [[0.0, 1.0], [0.0, 0.0]]]

    def test_representation_rejects_bad_shape(self) -> None:
        """Test that only 2x2 matrices are accepted."""
        with pytest.raises(ValueError):
            RepresentationSet(T=np.eye(3))

    def test_solver_defaults(self) -> None:
        """Test documented solver defaults."""
        config = SolverConfig()
        assert config.seed == 1
        assert config.precision_digits == 50

    def test_run_config_defaults(self) -> None:
        """Test RunConfig defaults."""
        config = RunConfig()
        assert config.jobs == 1
        assert config.output_format.value == "text"
        assert config.elimination.value == "auto"
