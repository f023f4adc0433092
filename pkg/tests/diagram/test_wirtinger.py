"""Tests for Wirtinger presentation data."""

from cordaug.core.models import WirtingerRelation
from cordaug.diagram.wirtinger import abelianization_is_cyclic, wirtinger


class TestWirtinger:
    """Tests for wirtinger relations."""

    def test_trefoil_relations(self, trefoil) -> None:
        """Test one relation per crossing with outgoing arc first."""
        assert wirtinger(trefoil) == [
            WirtingerRelation(j=3, i=1, k=2, epsilon=-1),
            WirtingerRelation(j=2, i=3, k=1, epsilon=-1),
            WirtingerRelation(j=1, i=2, k=3, epsilon=-1),
        ]

    def test_abelianization_cyclic(self, trefoil, figure_eight, trefoil_braid) -> None:
        """Test that knot groups abelianize to Z."""
        assert abelianization_is_cyclic(trefoil)
        assert abelianization_is_cyclic(figure_eight)
        assert abelianization_is_cyclic(trefoil_braid)
