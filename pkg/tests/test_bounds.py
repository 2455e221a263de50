"""
Tests for deficiency bounds and their reconciliation.
"""
from itertools import product

import pytest

from src.core.bounds import (
    Bound,
    BoundReport,
    Colorability,
    Provenance,
    bipartite_span_range,
    deficiency_report,
    divisibility_obstruction,
    general_odd_lower_bound,
    known_exact,
    multipartite_lower_bound,
    near_complete_exact,
    not_interval_colorable,
    upper_bound,
    upper_bound_candidates,
)
from src.core.constructions.registry import registry
from src.core.exceptions import InconsistentBoundsError, ValidationError
from src.core.graph import build_multipartite


class TestLowerBounds:
    """Tests for counting lower bounds."""

    def test_multipartite_bound(self):
        """K_{2,2,3}: sum of ((n_1 + 1)n_i - n_i^2) / 2 rounds to 1."""
        assert multipartite_lower_bound((2, 2, 3)) == 1
        assert multipartite_lower_bound((3, 2, 2)) == 1

    def test_multipartite_bound_complete(self):
        """K_5 needs deficiency at least 2."""
        assert multipartite_lower_bound((1, 1, 1, 1, 1)) == 2

    @pytest.mark.parametrize("sizes", [(2, 2), (1, 1, 2), (2, 3, 3, 2)])
    def test_multipartite_bound_needs_odd_order_and_three_parts(self, sizes):
        """Even order or two parts gives no bound."""
        assert multipartite_lower_bound(sizes) is None

    def test_multipartite_bound_clamped(self):
        """Negative sums clamp to zero."""
        assert multipartite_lower_bound((1, 2, 4)) == 0

    def test_general_odd_bound(self):
        """(2|E| - (|V|-1)Δ) / 2 on K_3 and K_{2,2,3}."""
        assert general_odd_lower_bound(build_multipartite((1, 1, 1))) == 1
        assert general_odd_lower_bound(build_multipartite((2, 2, 3))) == 1
        assert general_odd_lower_bound(build_multipartite((2, 2))) is None

    def test_divisibility_obstruction(self):
        """K_{1,1,3}: every degree is even but |E| = 7."""
        g = build_multipartite((1, 1, 3))
        assert g.num_edges == 7
        assert divisibility_obstruction(g) == 2

    @pytest.mark.parametrize("sizes", [(2, 3), (3, 3, 6), (1, 2, 2)])
    def test_no_obstruction(self, sizes):
        """Divisibility does not fire when gcd divides |E|."""
        assert divisibility_obstruction(build_multipartite(sizes)) is None

    def test_not_interval_colorable_facts(self):
        """Balanced nr odd and K_{n x r, (tr+1)n} with n(r+1) odd."""
        assert not_interval_colorable((3, 3, 3)) is Provenance.LEMMA_2_3
        assert not_interval_colorable((1, 1, 3)) is Provenance.THEOREM_3_4
        assert not_interval_colorable((2, 2, 2)) is None


class TestUpperBounds:
    """Tests for construction-backed upper bounds."""

    def test_two_two_three(self):
        """Theorem 3.5 beats the general constructions on K_{2,2,3}."""
        best = upper_bound((2, 2, 3))
        assert best == Bound(2, Provenance.THEOREM_3_5)

    def test_candidates_order(self):
        """Candidates appear in preference order."""
        sources = [b.source for b in upper_bound_candidates((2, 2, 3))]
        assert sources == [Provenance.THEOREM_3_5, Provenance.COROLLARY_3_2, Provenance.THEOREM_3_1]

    def test_general_bound_only(self):
        """K_{4,2,1,3} only has the shifted-sum bound."""
        assert upper_bound((4, 2, 1, 3)) == Bound(5, Provenance.THEOREM_3_1)

    def test_four_part_wins(self):
        """K_{1,1,1,3}: the four-part construction gives 1."""
        assert upper_bound((1, 1, 1, 3)) == Bound(1, Provenance.THEOREM_3_8)

    def test_bipartite(self):
        """Complete bipartite graphs are interval colorable."""
        assert upper_bound((2, 5)) == Bound(0, Provenance.BIPARTITE)

    def test_needs_two_parts(self):
        """One part is rejected."""
        with pytest.raises(ValidationError):
            upper_bound_candidates((3,))


class TestExactValues:
    """Tests for closed-form exact deficiencies."""

    @pytest.mark.parametrize("r,expected", [(2, 0), (3, 1), (4, 0), (5, 2), (7, 3)])
    def test_complete_graphs(self, r, expected):
        """def(K_n) is 0 for n even and (n-1)/2 for n odd."""
        exact = known_exact((1,) * r)
        assert exact == Bound(expected, Provenance.COMPLETE)

    @pytest.mark.parametrize("sizes,expected", [((1, 1, 2), 0), ((1, 2, 2), 1), ((1, 3, 3), 1), ((2, 1, 4), 0)])
    def test_one_m_n(self, sizes, expected):
        """def(K_{1,m,n}) is 0 iff gcd(m+1, n+1) = 1."""
        assert known_exact(sizes) == Bound(expected, Provenance.ONE_M_N)

    @pytest.mark.parametrize("ones,expected", [(3, 1), (5, 2), (7, 3)])
    def test_near_complete(self, ones, expected):
        """K_{2n+1} - e as K_{1,...,1,2}."""
        sizes = (1,) * ones + (2,)
        assert near_complete_exact(sizes) == expected
        assert known_exact(sizes) == Bound(expected, Provenance.COMPLETE_MINUS_EDGE)

    def test_near_complete_needs_odd_order(self):
        """K_{1,1,1,1,2} has even order."""
        assert near_complete_exact((1, 1, 1, 1, 2)) is None

    def test_interval_families(self):
        """Interval families report exact 0 with their theorem."""
        assert known_exact((2, 2, 2)) == Bound(0, Provenance.LEMMA_2_3)
        assert known_exact((3, 3, 6)) == Bound(0, Provenance.THEOREM_3_3)
        assert known_exact((2, 2, 6)) == Bound(0, Provenance.THEOREM_3_4)

    def test_unknown(self):
        """Nothing is known in closed form for K_{2,2,3}."""
        assert known_exact((2, 2, 3)) is None

    @pytest.mark.parametrize("m,n,expected", [(2, 3, (4, 4)), (2, 4, (4, 5)), (3, 3, (3, 5)), (1, 1, (1, 1))])
    def test_bipartite_spans(self, m, n, expected):
        """K_{m,n} has interval t-colorings exactly for m + n - gcd(m, n) <= t <= m + n - 1."""
        assert bipartite_span_range(m, n) == expected


class TestDeficiencyReport:
    """Tests for the combined report."""

    def test_two_two_three(self):
        """lower 1 (Lemma 2.4), upper 2 (Theorem 3.5), not interval colorable."""
        report = deficiency_report((2, 2, 3))
        assert report.lower == Bound(1, Provenance.LEMMA_2_4)
        assert report.upper == Bound(2, Provenance.THEOREM_3_5)
        assert report.exact is None
        assert report.interval_colorable is Colorability.NO

    def test_triangle(self):
        """K_3 is exact at 1."""
        report = deficiency_report((1, 1, 1))
        assert report.exact == Bound(1, Provenance.COMPLETE)
        assert report.lower.value == 1
        assert report.upper.value == 1

    def test_obstruction_lower_bound(self):
        """K_{1,1,3}: divisibility gives the lower bound."""
        report = deficiency_report((1, 1, 3))
        assert report.lower == Bound(1, Provenance.THEOREM_2_5)
        assert report.exact == Bound(1, Provenance.ONE_M_N)

    def test_interval_family(self):
        """K_{3,3,6} is interval colorable."""
        report = deficiency_report((3, 3, 6))
        assert report.exact == Bound(0, Provenance.THEOREM_3_3)
        assert report.interval_colorable is Colorability.YES

    def test_open_case(self):
        """K_{4,2,1,3} stays open between 0 and 5."""
        report = deficiency_report((4, 2, 1, 3))
        assert (report.lower.value, report.upper.value) == (0, 5)
        assert report.interval_colorable is Colorability.UNKNOWN

    def test_bipartite_span_range(self):
        """Two-part reports carry the span range."""
        report = deficiency_report((2, 4))
        assert report.span_range == (4, 5)
        assert report.interval_colorable is Colorability.YES

    def test_to_dict(self):
        """Reports serialize with provenance strings."""
        data = deficiency_report((2, 2, 3)).to_dict()
        assert data["lower"] == {"value": 1, "source": "Lemma 2.4"}
        assert data["upper"] == {"value": 2, "source": "Theorem 3.5"}
        assert data["exact"] is None
        assert data["interval_colorable"] == "no"

    @pytest.mark.parametrize("sizes", [sizes for r in (3, 4) for sizes in product(range(1, 4), repeat=r)])
    def test_bounds_against_built_colorings(self, sizes):
        """No built coloring beats the lower bound, and the upper bound is at most each of them."""
        report = deficiency_report(sizes)
        built = [registry.get(name).run(sizes) for name in registry.names() if registry.find(sizes, name) is not None]
        assert built
        for colored in built:
            assert report.lower.value <= colored.deficiency
            assert report.upper.value <= colored.deficiency

    def test_inconsistent_report_rejected(self):
        """lower > upper is a bug and raises."""
        with pytest.raises(InconsistentBoundsError) as exc:
            BoundReport((2, 2), Bound(1, Provenance.LEMMA_2_4), Bound(0, Provenance.BIPARTITE))
        assert exc.value.exit_code == 70
