"""
Graph model, edge-coloring representation and deficiency arithmetic.

Vertices of a complete multipartite graph are addressed as
(part_index, within_part_index), both 0-based. Pendant leaves live in a
separate namespace keyed by their anchor vertex and an ordinal. Adjacency is
implied by part membership; no edge list is stored.

Colors are 1-based. An EdgeColoring is only a mapping: properness is a
checked predicate, so search code can represent invalid states.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from src.core.exceptions import (
    ImproperColoringError,
    IncompleteColoringError,
    NotFoundError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Vertex = Tuple[int, int]


@dataclass(frozen=True, order=True)
class PendantLeaf:
    """Degree-1 vertex hanging off `anchor`."""
    anchor: Vertex
    ordinal: int

    def __repr__(self) -> str:
        return f"leaf{self.anchor}#{self.ordinal}"


Node = Union[Vertex, PendantLeaf]
Edge = Tuple[Node, Node]


def node_key(node: Node) -> Tuple[int, ...]:
    """Total order on nodes: core vertices first, then leaves."""
    if isinstance(node, PendantLeaf):
        return (1, node.anchor[0], node.anchor[1], node.ordinal)
    return (0, node[0], node[1])


def edge_key(edge: Edge) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    return (node_key(edge[0]), node_key(edge[1]))


def make_edge(a: Node, b: Node) -> Edge:
    """Canonical orientation of an undirected edge."""
    return (a, b) if node_key(a) <= node_key(b) else (b, a)


# ============================================
# Graph
# ============================================

@dataclass(frozen=True)
class PartitionedGraph:
    """
    Complete multipartite graph K_{n_1,...,n_r}, optionally with pendant edges.

    Two core vertices are adjacent iff they lie in different parts; a pendant
    leaf is adjacent only to its anchor.
    """
    parts: Tuple[int, ...]
    pendants: Tuple[Tuple[Vertex, int], ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) < 2:
            raise ValidationError(
                "A complete multipartite graph needs at least 2 parts",
                details={"parts": list(parts)}
            )
        for size in parts:
            if not isinstance(size, int) or isinstance(size, bool) or size < 1:
                raise ValidationError(
                    f"Part sizes must be positive integers, got {size!r}",
                    details={"parts": list(parts)}
                )
        object.__setattr__(self, "parts", parts)

        merged: Dict[Vertex, int] = {}
        for anchor, count in self.pendants:
            anchor = (int(anchor[0]), int(anchor[1]))
            if not self._is_core(anchor):
                raise NotFoundError("Anchor vertex", str(anchor))
            if count < 0:
                raise ValidationError(f"Pendant count for {anchor} must be nonnegative")
            if count:
                merged[anchor] = merged.get(anchor, 0) + count
        object.__setattr__(self, "pendants", tuple(sorted(merged.items())))

    def _is_core(self, v: object) -> bool:
        return (
            isinstance(v, tuple)
            and len(v) == 2
            and 0 <= v[0] < len(self.parts)
            and 0 <= v[1] < self.parts[v[0]]
        )

    # ---- vertices ---------------------------------------------------------

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @cached_property
    def pendant_counts(self) -> Mapping[Vertex, int]:
        return MappingProxyType(dict(self.pendants))

    @cached_property
    def core_vertices(self) -> Tuple[Vertex, ...]:
        return tuple((p, i) for p, size in enumerate(self.parts) for i in range(size))

    @cached_property
    def leaves(self) -> Tuple[PendantLeaf, ...]:
        return tuple(
            PendantLeaf(anchor, k) for anchor, count in self.pendants for k in range(count)
        )

    @cached_property
    def vertices(self) -> Tuple[Node, ...]:
        return self.core_vertices + self.leaves

    @property
    def num_vertices(self) -> int:
        return sum(self.parts) + sum(count for _, count in self.pendants)

    def has_vertex(self, node: object) -> bool:
        if isinstance(node, PendantLeaf):
            return 0 <= node.ordinal < self.pendant_counts.get(node.anchor, 0)
        return self._is_core(node)

    def require_vertex(self, node: Node) -> None:
        if not self.has_vertex(node):
            raise NotFoundError("Vertex", repr(node))

    def part_members(self, part: int) -> Tuple[Vertex, ...]:
        return tuple((part, i) for i in range(self.parts[part]))

    # ---- adjacency --------------------------------------------------------

    def adjacent(self, a: Node, b: Node) -> bool:
        if isinstance(a, PendantLeaf):
            return a.anchor == b
        if isinstance(b, PendantLeaf):
            return b.anchor == a
        return a[0] != b[0]

    def degree(self, node: Node) -> int:
        self.require_vertex(node)
        if isinstance(node, PendantLeaf):
            return 1
        return sum(self.parts) - self.parts[node[0]] + self.pendant_counts.get(node, 0)

    def neighbors(self, node: Node) -> List[Node]:
        self.require_vertex(node)
        if isinstance(node, PendantLeaf):
            return [node.anchor]
        out: List[Node] = [v for v in self.core_vertices if v[0] != node[0]]
        out.extend(PendantLeaf(node, k) for k in range(self.pendant_counts.get(node, 0)))
        return out

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges in canonical (sorted) order."""
        core = self.core_vertices
        out: List[Edge] = [
            (u, v)
            for idx, u in enumerate(core)
            for v in core[idx + 1:]
            if u[0] != v[0]
        ]
        out.extend((leaf.anchor, leaf) for leaf in self.leaves)
        return tuple(sorted(out, key=edge_key))

    @property
    def num_edges(self) -> int:
        total = sum(self.parts)
        cross = (total * total - sum(s * s for s in self.parts)) // 2
        return cross + sum(count for _, count in self.pendants)

    @property
    def max_degree(self) -> int:
        return max(self.degree(v) for v in self.vertices)

    def has_edge(self, a: Node, b: Node) -> bool:
        return self.has_vertex(a) and self.has_vertex(b) and self.adjacent(a, b)

    def describe(self) -> str:
        name = "K_{" + ",".join(str(s) for s in self.parts) + "}"
        if self.pendants:
            name += f" + {sum(c for _, c in self.pendants)} pendant(s)"
        return name


def build_multipartite(sizes: Sequence[int]) -> PartitionedGraph:
    """Complete multipartite graph with the given part sizes, in the given order."""
    return PartitionedGraph(tuple(sizes))


def attach_pendants(g: PartitionedGraph, counts: Mapping[Vertex, int]) -> PartitionedGraph:
    """Return `g` with `counts[v]` new degree-1 neighbors attached at each anchor v."""
    for anchor in counts:
        if not g._is_core(anchor):
            raise NotFoundError("Anchor vertex", str(anchor))
    if not any(counts.values()):
        return g
    return PartitionedGraph(g.parts, g.pendants + tuple(counts.items()))


# ============================================
# Color sets and sequences
# ============================================

@dataclass(frozen=True)
class ColorSet:
    """Nonempty finite set of positive colors."""
    elements: FrozenSet[int]

    def __post_init__(self):
        elements = frozenset(self.elements)
        if not elements:
            raise ValidationError("A color set must be nonempty")
        if min(elements) < 1:
            raise ValidationError(f"Colors must be positive, got {min(elements)}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def interval(cls, low: int, high: int) -> "ColorSet":
        if high < low:
            raise ValidationError(f"Empty interval [{low}, {high}]")
        return cls(frozenset(range(low, high + 1)))

    @property
    def min(self) -> int:
        return min(self.elements)

    @property
    def max(self) -> int:
        return max(self.elements)

    @property
    def deficiency(self) -> int:
        return self.max - self.min - len(self.elements) + 1

    @property
    def is_interval(self) -> bool:
        return self.deficiency == 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __contains__(self, color: object) -> bool:
        return color in self.elements

    def __repr__(self) -> str:
        if self.is_interval:
            return f"[{self.min},{self.max}]"
        return "{" + ",".join(str(c) for c in self) + "}"


def set_deficiency(a: Union[ColorSet, Iterable[int]]) -> int:
    """def(A) = max A - min A - |A| + 1: the integers missing inside [min A, max A]."""
    if not isinstance(a, ColorSet):
        a = ColorSet(frozenset(a))
    return a.deficiency


@dataclass(frozen=True)
class ContinuousSequence:
    """Nondecreasing sequence of nonnegative integers with no value skipped."""
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise ValidationError("A continuous sequence must be nonempty")
        if values[0] < 0:
            raise ValidationError("Continuous sequences hold nonnegative integers")
        for prev, cur in zip(values, values[1:]):
            if cur < prev:
                raise ValidationError(f"Sequence {values} is not nondecreasing")
            if cur > prev + 1:
                raise ValidationError(
                    f"Sequence {values} is not continuous: {prev + 1} missing"
                )
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "ContinuousSequence":
        return cls(tuple(sorted(values)))

    @property
    def lower(self) -> int:
        return self.values[0]

    @property
    def upper(self) -> int:
        return self.values[-1]

    def shifted(self, p: int) -> "ContinuousSequence":
        return ContinuousSequence(tuple(v + p for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


class SpectralEdge(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class SpectrumEdgeSequence:
    """Sorted per-vertex spectrum minima (LOWER) or maxima (UPPER) over a vertex subset."""
    kind: SpectralEdge
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if any(cur < prev for prev, cur in zip(values, values[1:])):
            raise ValidationError("Spectral edge sequences are sorted nondecreasing")
        object.__setattr__(self, "values", values)

    @property
    def is_continuous(self) -> bool:
        return all(cur - prev <= 1 for prev, cur in zip(self.values, self.values[1:]))

    def to_continuous(self) -> ContinuousSequence:
        return ContinuousSequence(self.values)

    def __len__(self) -> int:
        return len(self.values)


# ============================================
# Colorings
# ============================================

@dataclass(frozen=True)
class EdgeColoring:
    """Mapping edge -> color in [1, t]. Properness is not enforced here."""
    colors: Mapping[Edge, int]
    t: int

    def __post_init__(self):
        normalized: Dict[Edge, int] = {}
        for (a, b), color in self.colors.items():
            if not isinstance(color, int) or color < 1:
                raise ValidationError(f"Edge {(a, b)} has non-positive color {color!r}")
            normalized[make_edge(a, b)] = color
        if self.t < 0:
            raise ValidationError(f"Color count must be nonnegative, got {self.t}")
        if normalized and max(normalized.values()) > self.t:
            raise ValidationError(
                f"Color {max(normalized.values())} exceeds declared t={self.t}"
            )
        object.__setattr__(self, "colors", MappingProxyType(normalized))

    @classmethod
    def from_items(
        cls, items: Iterable[Tuple[Edge, int]], t: Optional[int] = None
    ) -> "EdgeColoring":
        mapping: Dict[Edge, int] = {}
        for (a, b), color in items:
            edge = make_edge(a, b)
            if edge in mapping:
                raise ValidationError(f"Edge {edge} colored twice")
            mapping[edge] = color
        if t is None:
            t = max(mapping.values(), default=0)
        return cls(mapping, t)

    def color(self, a: Node, b: Node) -> Optional[int]:
        return self.colors.get(make_edge(a, b))

    def items(self) -> List[Tuple[Edge, int]]:
        """Edges with colors in canonical edge order."""
        return sorted(self.colors.items(), key=lambda item: edge_key(item[0]))

    @property
    def used_colors(self) -> FrozenSet[int]:
        return frozenset(self.colors.values())

    @property
    def max_color(self) -> int:
        return max(self.colors.values(), default=0)

    def __len__(self) -> int:
        return len(self.colors)


def relabel(
    c: EdgeColoring,
    mapping: Callable[[Node], Node],
    offset: int = 0,
    t: Optional[int] = None,
) -> EdgeColoring:
    """Move a coloring onto other vertex names, adding `offset` to every color."""
    return EdgeColoring.from_items(
        (((mapping(a), mapping(b)), color + offset) for (a, b), color in c.colors.items()),
        t=c.t + offset if t is None else t,
    )


def merge_colorings(parts: Iterable[EdgeColoring], t: Optional[int] = None) -> EdgeColoring:
    """Union of colorings on edge-disjoint subgraphs."""
    items: List[Tuple[Edge, int]] = []
    for piece in parts:
        items.extend(piece.colors.items())
    return EdgeColoring.from_items(items, t=t)


def vertex_spectrum(g: PartitionedGraph, c: EdgeColoring, v: Node) -> ColorSet:
    """S(v, c): colors on the edges incident to v."""
    g.require_vertex(v)
    colors = [c.color(v, u) for u in g.neighbors(v)]
    present = [color for color in colors if color is not None]
    if not present:
        raise IncompleteColoringError(make_edge(v, g.neighbors(v)[0]))
    return ColorSet(frozenset(present))


def covers(g: PartitionedGraph, c: EdgeColoring) -> bool:
    """Every edge of g colored and nothing else colored."""
    return len(c) == g.num_edges and all(edge in c.colors for edge in g.edges)


def find_uncolored(g: PartitionedGraph, c: EdgeColoring) -> Optional[Edge]:
    for edge in g.edges:
        if edge not in c.colors:
            return edge
    return None


def find_conflict(g: PartitionedGraph, c: EdgeColoring) -> Optional[Tuple[Edge, Edge, int]]:
    """First pair of adjacent edges with the same color, scanning vertices in order."""
    for v in g.vertices:
        seen: Dict[int, Edge] = {}
        for u in g.neighbors(v):
            edge = make_edge(v, u)
            color = c.colors.get(edge)
            if color is None:
                continue
            if color in seen:
                return seen[color], edge, color
            seen[color] = edge
    return None


def is_proper(g: PartitionedGraph, c: EdgeColoring) -> bool:
    return find_conflict(g, c) is None


def _require_proper(g: PartitionedGraph, c: EdgeColoring) -> None:
    missing = find_uncolored(g, c)
    if missing is not None:
        raise IncompleteColoringError(missing)
    conflict = find_conflict(g, c)
    if conflict is not None:
        raise ImproperColoringError(*conflict)


def vertex_deficiencies(g: PartitionedGraph, c: EdgeColoring) -> Dict[Node, int]:
    _require_proper(g, c)
    return {v: vertex_spectrum(g, c, v).deficiency for v in g.vertices}


def coloring_deficiency(g: PartitionedGraph, c: EdgeColoring) -> int:
    """def(g, c): summed spectrum deficiency. Rejects improper or partial colorings."""
    return sum(vertex_deficiencies(g, c).values())


def part_deficiencies(g: PartitionedGraph, c: EdgeColoring) -> Tuple[int, ...]:
    """Deficiency summed per part; a pendant leaf never contributes."""
    per_vertex = vertex_deficiencies(g, c)
    totals = [0] * g.num_parts
    for v, value in per_vertex.items():
        if not isinstance(v, PendantLeaf):
            totals[v[0]] += value
    return tuple(totals)


def is_interval_t_coloring(g: PartitionedGraph, c: EdgeColoring) -> bool:
    """Proper, every spectrum an interval, and every color of [1, t] used."""
    if not covers(g, c) or not is_proper(g, c):
        return False
    if c.used_colors != frozenset(range(1, c.t + 1)):
        return False
    return all(vertex_spectrum(g, c, v).is_interval for v in g.vertices)


def spectral_edge_sequence(
    g: PartitionedGraph,
    c: EdgeColoring,
    subset: Iterable[Node],
    kind: SpectralEdge,
) -> SpectrumEdgeSequence:
    """LSE (kind=LOWER) or USE (kind=UPPER) of `subset` under c."""
    nodes = list(subset)
    if not nodes:
        raise ValidationError("Spectral edge sequences need a nonempty vertex subset")
    spectra = [vertex_spectrum(g, c, v) for v in nodes]
    pick = (lambda s: s.min) if kind is SpectralEdge.LOWER else (lambda s: s.max)
    return SpectrumEdgeSequence(kind, tuple(sorted(pick(s) for s in spectra)))


def shift_coloring(c: EdgeColoring, p: int) -> EdgeColoring:
    """c ⊕ p: every color and t increased by p."""
    if p < 0:
        raise ValidationError(f"Shift must be nonnegative, got {p}")
    return EdgeColoring({edge: color + p for edge, color in c.colors.items()}, c.t + p)


def reflect_coloring(c: EdgeColoring) -> EdgeColoring:
    """c -> t + 1 - c."""
    return EdgeColoring({edge: c.t + 1 - color for edge, color in c.colors.items()}, c.t)


@dataclass(frozen=True)
class ColoredGraph:
    """A graph together with an edge-coloring of it."""
    graph: PartitionedGraph
    coloring: EdgeColoring
    label: str = field(default="", compare=False)

    @property
    def t(self) -> int:
        return self.coloring.t

    @property
    def deficiency(self) -> int:
        return coloring_deficiency(self.graph, self.coloring)

    @property
    def is_interval(self) -> bool:
        return is_interval_t_coloring(self.graph, self.coloring)

    def spectrum(self, v: Node) -> ColorSet:
        return vertex_spectrum(self.graph, self.coloring, v)
