"""
Tests for the graph model, colorings and deficiency arithmetic.
"""
from itertools import combinations, product
from typing import List, Tuple

import networkx as nx
import pytest

from src.core.constructions import ShiftedSumLayout, shifted_sum_coloring
from src.core.constructions.registry import registry
from src.core.exceptions import (
    ImproperColoringError,
    IncompleteColoringError,
    NotFoundError,
    ValidationError,
)
from src.core.graph import (
    ColorSet,
    ContinuousSequence,
    EdgeColoring,
    PartitionedGraph,
    PendantLeaf,
    SpectralEdge,
    SpectrumEdgeSequence,
    attach_pendants,
    build_multipartite,
    coloring_deficiency,
    find_conflict,
    is_interval_t_coloring,
    is_proper,
    make_edge,
    part_deficiencies,
    reflect_coloring,
    set_deficiency,
    shift_coloring,
    spectral_edge_sequence,
    vertex_deficiencies,
    vertex_spectrum,
)
from src.core.oracle import SearchBudget, exact_deficiency, exact_interval_spans
from tests.conftest import size_tuples

SIZE_TUPLES = [(1, 1), (2, 3), (1, 1, 1), (4, 2, 1, 3), (3, 3, 6), (2, 2, 2, 2), (1, 2, 3, 4, 5)]

Witness = Tuple[str, PartitionedGraph, EdgeColoring]


@pytest.fixture(scope="module")
def witnesses() -> List[Witness]:
    """Shifted-sum colorings, every construction on small sizes, and oracle witnesses."""
    pool: List[Witness] = []
    for sizes in list(product(range(1, 4), repeat=3)) + list(product(range(1, 4), repeat=4)):
        layout = ShiftedSumLayout.from_sizes(sizes)
        pool.append((f"thm2 {sizes}", build_multipartite(layout.ordered_sizes), shifted_sum_coloring(layout)))
    for name, sizes in [
        ("thm3", (3, 3, 6)), ("thm4", (2, 2, 6)), ("thm5", (2, 2, 3)), ("thm6", (2, 2, 4)),
        ("thm7", (1, 1, 2, 2)), ("thm8", (1, 2, 2, 5)), ("lemma2", (2, 6)), ("lemma3", (2, 2, 2)),
    ]:
        colored = registry.get(name).run(sizes)
        pool.append((f"{name} {sizes}", colored.graph, colored.coloring))
    budget = SearchBudget(node_limit=None)
    for sizes in size_tuples(5):
        g = build_multipartite(sizes)
        pool.append((f"oracle def {sizes}", g, exact_deficiency(g, budget).witness))
    for m, n in [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3)]:
        g = build_multipartite((m, n))
        for t, c in exact_interval_spans(g, budget=budget).items():
            pool.append((f"oracle span {t} {(m, n)}", g, c))
    return pool


def triangle_coloring() -> EdgeColoring:
    return EdgeColoring({
        ((0, 0), (1, 0)): 1,
        ((0, 0), (2, 0)): 2,
        ((1, 0), (2, 0)): 3,
    }, 3)


class TestPartitionedGraph:
    """Tests for the complete multipartite graph model."""

    @pytest.mark.parametrize("sizes", SIZE_TUPLES)
    def test_counts_match_networkx(self, sizes):
        """Vertex and edge counts agree with networkx."""
        g = build_multipartite(sizes)
        reference = nx.complete_multipartite_graph(*sizes)
        assert g.num_vertices == reference.number_of_nodes()
        assert g.num_edges == reference.number_of_edges()
        assert len(g.edges) == g.num_edges

    @pytest.mark.parametrize("sizes", SIZE_TUPLES)
    def test_degrees_match_networkx(self, sizes):
        """Degree multiset and maximum degree agree with networkx."""
        g = build_multipartite(sizes)
        reference = nx.complete_multipartite_graph(*sizes)
        assert sorted(g.degree(v) for v in g.vertices) == sorted(d for _, d in reference.degree())
        assert g.max_degree == max(d for _, d in reference.degree())

    def test_edges_are_canonical_and_sorted(self):
        """Edges are oriented and listed in canonical order."""
        g = build_multipartite((2, 1, 2))
        assert all(make_edge(a, b) == (a, b) for a, b in g.edges)
        assert list(g.edges) == sorted(g.edges, key=lambda e: (e[0], e[1]))

    def test_adjacency_follows_parts(self):
        """Vertices are adjacent exactly when they lie in different parts."""
        g = build_multipartite((2, 3))
        assert g.adjacent((0, 0), (1, 2))
        assert not g.adjacent((1, 0), (1, 1))
        assert not g.has_edge((0, 0), (0, 1))

    def test_describe(self):
        """Graphs print as K_{...}."""
        assert build_multipartite((4, 2, 1, 3)).describe() == "K_{4,2,1,3}"

    def test_rejects_single_part(self):
        """A single part is not a multipartite graph."""
        with pytest.raises(ValidationError):
            PartitionedGraph((3,))

    @pytest.mark.parametrize("sizes", [(0, 2), (2, -1), (2, True)])
    def test_rejects_bad_sizes(self, sizes):
        """Part sizes must be positive integers."""
        with pytest.raises(ValidationError):
            PartitionedGraph(sizes)

    def test_unknown_vertex(self):
        """Asking for a vertex outside the graph raises NotFoundError."""
        with pytest.raises(NotFoundError):
            build_multipartite((1, 1)).degree((0, 1))


class TestPendants:
    """Tests for pendant leaves."""

    def test_attach_increases_degree_and_edges(self):
        """Each pendant adds one edge and one degree at its anchor."""
        g = build_multipartite((1, 2))
        h = attach_pendants(g, {(0, 0): 2})
        assert h.num_edges == g.num_edges + 2
        assert h.num_vertices == g.num_vertices + 2
        assert h.degree((0, 0)) == g.degree((0, 0)) + 2
        assert h.degree(PendantLeaf((0, 0), 1)) == 1

    def test_leaf_adjacent_only_to_anchor(self):
        """A leaf's only neighbor is its anchor."""
        h = attach_pendants(build_multipartite((1, 1)), {(1, 0): 1})
        leaf = PendantLeaf((1, 0), 0)
        assert h.neighbors(leaf) == [(1, 0)]
        assert not h.adjacent(leaf, (0, 0))

    def test_counts_merge(self):
        """Attaching twice at one anchor merges the counts."""
        g = attach_pendants(build_multipartite((1, 1)), {(0, 0): 1})
        h = attach_pendants(g, {(0, 0): 2})
        assert h.pendant_counts[(0, 0)] == 3

    def test_anchor_must_be_core(self):
        """Leaves hang off core vertices only."""
        with pytest.raises(NotFoundError):
            attach_pendants(build_multipartite((1, 1)), {(2, 0): 1})

    def test_leaves_sort_after_core_edges(self):
        """Leaf edges come after every core edge in canonical order."""
        h = attach_pendants(build_multipartite((1, 1)), {(0, 0): 1})
        assert h.edges[-1] == ((0, 0), PendantLeaf((0, 0), 0))

    def test_describe_mentions_pendants(self):
        """The description counts pendant edges."""
        h = attach_pendants(build_multipartite((1, 1)), {(0, 0): 2})
        assert h.describe() == "K_{1,1} + 2 pendant(s)"


class TestColorSet:
    """Tests for color sets and set deficiency."""

    @pytest.mark.parametrize("size", range(1, 7))
    def test_deficiency_counts_holes(self, size):
        """def(A) equals the number of integers missing between min A and max A."""
        for subset in combinations(range(1, 8), size):
            holes = sum(1 for x in range(min(subset), max(subset) + 1) if x not in subset)
            assert set_deficiency(subset) == holes

    def test_interval(self):
        """Intervals have deficiency 0 and print compactly."""
        s = ColorSet.interval(3, 6)
        assert s.is_interval
        assert repr(s) == "[3,6]"
        assert list(s) == [3, 4, 5, 6]

    def test_gapped_repr(self):
        """Gapped sets print every element."""
        assert repr(ColorSet(frozenset({1, 3}))) == "{1,3}"

    @pytest.mark.parametrize("elements", [frozenset(), frozenset({0, 1})])
    def test_rejects_invalid(self, elements):
        """Color sets are nonempty and positive."""
        with pytest.raises(ValidationError):
            ColorSet(elements)


class TestSequences:
    """Tests for continuous and spectral edge sequences."""

    def test_continuous_accepts_repeats(self):
        """Repeated values are allowed; skipped values are not."""
        seq = ContinuousSequence((2, 2, 3, 4, 4))
        assert (seq.lower, seq.upper) == (2, 4)
        assert list(seq.shifted(3)) == [5, 5, 6, 7, 7]

    @pytest.mark.parametrize("values", [(1, 3), (2, 1), (-1, 0), ()])
    def test_continuous_rejects(self, values):
        """Gaps, descents, negatives and empty sequences are rejected."""
        with pytest.raises(ValidationError):
            ContinuousSequence(values)

    def test_from_values_sorts(self):
        """from_values sorts its input."""
        assert ContinuousSequence.from_values([3, 1, 2]).values == (1, 2, 3)

    def test_spectral_edge_sequences(self):
        """LSE and USE of a triangle coloring."""
        g = build_multipartite((1, 1, 1))
        c = triangle_coloring()
        lse = spectral_edge_sequence(g, c, g.vertices, SpectralEdge.LOWER)
        use = spectral_edge_sequence(g, c, g.vertices, SpectralEdge.UPPER)
        assert lse.values == (1, 1, 2)
        assert use.values == (2, 3, 3)
        assert lse.is_continuous
        assert lse.to_continuous().upper == 2

    def test_spectral_sequence_must_be_sorted(self):
        """Spectral edge sequences are sorted."""
        with pytest.raises(ValidationError):
            SpectrumEdgeSequence(SpectralEdge.LOWER, (2, 1))


class TestEdgeColoring:
    """Tests for the edge-coloring mapping."""

    def test_normalizes_orientation(self):
        """Edges given in either orientation are stored canonically."""
        c = EdgeColoring({((1, 0), (0, 0)): 1}, 1)
        assert c.color((0, 0), (1, 0)) == 1
        assert ((0, 0), (1, 0)) in c.colors

    def test_color_above_t_rejected(self):
        """Colors may not exceed t."""
        with pytest.raises(ValidationError):
            EdgeColoring({((0, 0), (1, 0)): 3}, 2)

    def test_nonpositive_color_rejected(self):
        """Colors are 1-based."""
        with pytest.raises(ValidationError):
            EdgeColoring({((0, 0), (1, 0)): 0}, 2)

    def test_from_items_rejects_duplicates(self):
        """An edge may be colored once."""
        with pytest.raises(ValidationError):
            EdgeColoring.from_items([(((0, 0), (1, 0)), 1), (((1, 0), (0, 0)), 2)])

    def test_from_items_infers_t(self):
        """t defaults to the largest color."""
        c = EdgeColoring.from_items([(((0, 0), (1, 0)), 4)])
        assert c.t == 4
        assert c.used_colors == frozenset({4})


class TestDeficiency:
    """Tests for spectra, properness and deficiency."""

    def test_triangle(self, triangle):
        """The 3-coloring of K_3 has deficiency 1 at the middle vertex."""
        c = triangle_coloring()
        assert vertex_spectrum(triangle, c, (1, 0)) == ColorSet(frozenset({1, 3}))
        assert vertex_deficiencies(triangle, c) == {(0, 0): 0, (1, 0): 1, (2, 0): 0}
        assert coloring_deficiency(triangle, c) == 1
        assert part_deficiencies(triangle, c) == (0, 1, 0)
        assert not is_interval_t_coloring(triangle, c)

    def test_improper_detected(self, triangle):
        """Two adjacent edges with one color are reported."""
        c = EdgeColoring({
            ((0, 0), (1, 0)): 1,
            ((0, 0), (2, 0)): 1,
            ((1, 0), (2, 0)): 2,
        }, 2)
        assert not is_proper(triangle, c)
        first, second, color = find_conflict(triangle, c)
        assert color == 1
        assert {first, second} == {((0, 0), (1, 0)), ((0, 0), (2, 0))}
        with pytest.raises(ImproperColoringError):
            coloring_deficiency(triangle, c)

    def test_partial_rejected(self, triangle):
        """Deficiency needs every edge colored."""
        c = EdgeColoring({((0, 0), (1, 0)): 1}, 1)
        with pytest.raises(IncompleteColoringError):
            coloring_deficiency(triangle, c)

    def test_bipartite_latin_square_is_interval(self, k33):
        """The cyclic Latin square colors K_{3,3} as an interval 3-coloring."""
        c = EdgeColoring({((0, i), (1, j)): (i + j) % 3 + 1 for i in range(3) for j in range(3)}, 3)
        assert is_interval_t_coloring(k33, c)
        assert coloring_deficiency(k33, c) == 0

    def test_unused_color_is_not_interval(self, k33):
        """An interval coloring must use every color of [1, t]."""
        c = EdgeColoring({((0, i), (1, j)): (i + j) % 3 + 1 for i in range(3) for j in range(3)}, 4)
        assert not is_interval_t_coloring(k33, c)

    def test_leaves_excluded_from_part_totals(self):
        """Pendant leaves carry no deficiency into part totals."""
        h = attach_pendants(build_multipartite((1, 1)), {(0, 0): 1})
        c = EdgeColoring({((0, 0), (1, 0)): 1, ((0, 0), PendantLeaf((0, 0), 0)): 2}, 2)
        assert part_deficiencies(h, c) == (0, 0)
        assert is_interval_t_coloring(h, c)


class TestMetamorphic:
    """Shifting and reflecting colors preserve deficiency."""

    @pytest.mark.parametrize("sizes", [(4, 2, 1, 3), (3, 1, 2), (5, 3, 3, 4), (2, 2, 2)])
    @pytest.mark.parametrize("p", [0, 1, 5])
    def test_shift_preserves_deficiency(self, sizes, p):
        """c ⊕ p has the deficiency of c."""
        layout = ShiftedSumLayout.from_sizes(sizes)
        g = build_multipartite(layout.ordered_sizes)
        c = shifted_sum_coloring(layout)
        shifted = shift_coloring(c, p)
        assert shifted.t == c.t + p
        assert coloring_deficiency(g, shifted) == coloring_deficiency(g, c)

    @pytest.mark.parametrize("sizes", [(4, 2, 1, 3), (3, 1, 2), (5, 3, 3, 4), (2, 2, 2)])
    def test_reflection_preserves_deficiency(self, sizes):
        """t + 1 - c has the deficiency of c and reflecting twice is the identity."""
        layout = ShiftedSumLayout.from_sizes(sizes)
        g = build_multipartite(layout.ordered_sizes)
        c = shifted_sum_coloring(layout)
        mirrored = reflect_coloring(c)
        assert coloring_deficiency(g, mirrored) == coloring_deficiency(g, c)
        assert reflect_coloring(mirrored) == c

    def test_witness_pool_size(self, witnesses):
        """The pool mixes at least 100 construction and oracle witnesses."""
        assert len(witnesses) >= 100
        assert any(label.startswith("oracle") for label, _, _ in witnesses)

    @pytest.mark.parametrize("p", [0, 1, 5])
    def test_shift_preserves_pooled_deficiency(self, witnesses, p):
        """Shifting keeps the per-vertex deficiency of every pooled witness."""
        for label, g, c in witnesses:
            shifted = shift_coloring(c, p)
            assert coloring_deficiency(g, shifted) == coloring_deficiency(g, c), label
            assert vertex_deficiencies(g, shifted) == vertex_deficiencies(g, c), label

    def test_reflection_preserves_pooled_deficiency(self, witnesses):
        """Reflecting keeps the deficiency of every pooled witness and is an involution."""
        for label, g, c in witnesses:
            mirrored = reflect_coloring(c)
            assert coloring_deficiency(g, mirrored) == coloring_deficiency(g, c), label
            assert reflect_coloring(mirrored) == c, label
            if is_interval_t_coloring(g, c):
                assert is_interval_t_coloring(g, mirrored), label

    def test_negative_shift_rejected(self):
        """Shifts are nonnegative."""
        with pytest.raises(ValidationError):
            shift_coloring(triangle_coloring(), -1)
