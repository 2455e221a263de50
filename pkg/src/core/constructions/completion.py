"""
Forced-spectrum completion.

Given a graph and an interval per vertex whose length equals the vertex
degree, find a proper edge-coloring whose spectra are exactly those
intervals. Each edge may only take colors in the intersection of its two
endpoint intervals; the search propagates singleton domains and
"hidden singles" (a color of a vertex that only one incident edge can still
take) before branching on the smallest domain, lowest color first.
"""
import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Union

from src.core.config import settings
from src.core.exceptions import BudgetExhaustedError, ValidationError
from src.core.graph import (
    ColorSet,
    ContinuousSequence,
    EdgeColoring,
    Node,
    PartitionedGraph,
    build_multipartite,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumAssignment:
    """Prescribed interval spectrum for every vertex of a graph."""
    spectra: Mapping[Node, ColorSet]

    def __post_init__(self):
        for v, spectrum in self.spectra.items():
            if not spectrum.is_interval:
                raise ValidationError(f"Prescribed spectrum of {v} is not an interval: {spectrum!r}")

    @classmethod
    def from_bounds(cls, bounds: Mapping[Node, tuple]) -> "SpectrumAssignment":
        """Build from {vertex: (low, high)}."""
        return cls({v: ColorSet.interval(lo, hi) for v, (lo, hi) in bounds.items()})

    def check_against(self, g: PartitionedGraph) -> None:
        """Every vertex of g has a spectrum whose length equals its degree."""
        missing = [v for v in g.vertices if v not in self.spectra]
        if missing:
            raise ValidationError(
                f"No prescribed spectrum for {missing[0]!r}",
                details={"missing": [repr(v) for v in missing]}
            )
        extra = [v for v in self.spectra if not g.has_vertex(v)]
        if extra:
            raise ValidationError(f"Spectrum given for unknown vertex {extra[0]!r}")
        for v in g.vertices:
            if len(self.spectra[v]) != g.degree(v):
                raise ValidationError(
                    f"Spectrum {self.spectra[v]!r} of {v!r} has length "
                    f"{len(self.spectra[v])}, degree is {g.degree(v)}"
                )

    def __getitem__(self, v: Node) -> ColorSet:
        return self.spectra[v]


@dataclass(frozen=True)
class Infeasible:
    """No coloring realizes the prescribed spectra."""
    reason: str
    nodes: int = 0

    def __bool__(self) -> bool:
        return False


class _CompletionSearch:
    """Bitmask backtracking. Bit c of a mask stands for color c."""

    def __init__(self, g: PartitionedGraph, assignment: SpectrumAssignment, node_limit: int):
        self.node_limit = node_limit
        self.nodes = 0
        self.vertices = list(g.vertices)
        index = {v: k for k, v in enumerate(self.vertices)}
        self.edges = list(g.edges)
        self.ends = [(index[a], index[b]) for a, b in self.edges]
        self.incident: List[List[int]] = [[] for _ in self.vertices]
        for e, (a, b) in enumerate(self.ends):
            self.incident[a].append(e)
            self.incident[b].append(e)

        self.spectrum_mask = [self._mask(assignment[v]) for v in self.vertices]
        self.base = [self.spectrum_mask[a] & self.spectrum_mask[b] for a, b in self.ends]

    @staticmethod
    def _mask(colors: ColorSet) -> int:
        return ((1 << (colors.max + 1)) - 1) ^ ((1 << colors.min) - 1)

    def _domain(self, e: int, need: List[int]) -> int:
        a, b = self.ends[e]
        return self.base[e] & need[a] & need[b]

    def _assign(self, e: int, bit: int, colors: List[int], need: List[int]) -> None:
        a, b = self.ends[e]
        colors[e] = bit.bit_length() - 1
        need[a] &= ~bit
        need[b] &= ~bit

    def _propagate(self, colors: List[int], need: List[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for e in range(len(self.edges)):
                if colors[e]:
                    continue
                dom = self._domain(e, need)
                if not dom:
                    return False
                if dom & (dom - 1) == 0:
                    self._assign(e, dom, colors, need)
                    changed = True

            for x, incident in enumerate(self.incident):
                pending = need[x]
                while pending:
                    bit = pending & -pending
                    pending ^= bit
                    if not need[x] & bit:
                        continue
                    holders = [
                        e for e in incident
                        if not colors[e] and self._domain(e, need) & bit
                    ]
                    if not holders:
                        return False
                    if len(holders) == 1:
                        self._assign(holders[0], bit, colors, need)
                        changed = True
        return True

    def _search(self, colors: List[int], need: List[int]) -> Optional[List[int]]:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExhaustedError("Completion search exceeded its node limit", nodes=self.nodes)
        if not self._propagate(colors, need):
            return None

        open_edges = [e for e in range(len(self.edges)) if not colors[e]]
        if not open_edges:
            return colors

        e = min(open_edges, key=lambda k: (self._domain(k, need).bit_count(), k))
        dom = self._domain(e, need)
        while dom:
            bit = dom & -dom
            dom ^= bit
            next_colors, next_need = colors[:], need[:]
            self._assign(e, bit, next_colors, next_need)
            found = self._search(next_colors, next_need)
            if found is not None:
                return found
        return None

    def run(self) -> Optional[List[int]]:
        for e, dom in enumerate(self.base):
            if not dom:
                logger.debug(f"Edge {self.edges[e]} has disjoint endpoint spectra")
                return None
        return self._search([0] * len(self.edges), list(self.spectrum_mask))


def forced_spectrum_completion(
    g: PartitionedGraph,
    assignment: SpectrumAssignment,
    node_limit: Optional[int] = None,
) -> Union[EdgeColoring, Infeasible]:
    """
    Proper coloring of g with vertex_spectrum(v) == assignment[v] for every v.

    Returns an Infeasible verdict when no such coloring exists. Deterministic:
    identical inputs yield the identical coloring.

    Raises:
        ValidationError: spectrum lengths do not match degrees.
        BudgetExhaustedError: node_limit reached before a verdict.
    """
    assignment.check_against(g)
    limit = node_limit if node_limit is not None else settings.completion.node_limit
    search = _CompletionSearch(g, assignment, limit)
    colors = search.run()
    if colors is None:
        logger.info(f"Completion on {g.describe()} infeasible after {search.nodes} nodes")
        return Infeasible(f"no coloring of {g.describe()} realizes the prescribed spectra", search.nodes)

    logger.debug(f"Completion on {g.describe()} solved in {search.nodes} nodes")
    t = max(spectrum.max for spectrum in assignment.spectra.values())
    return EdgeColoring(dict(zip(search.edges, colors)), t)


def prescribed_lse_knn(n: int, lse: ContinuousSequence) -> EdgeColoring:
    """
    Coloring of K_{n,n} with interval spectra whose sorted minima are `lse` on both sides.

    Vertex (0, i) and (1, i) both get spectrum [l_i, l_i + n - 1] where l is
    `lse` in sorted order.
    """
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    if len(lse) != n:
        raise ValidationError(f"Sequence length {len(lse)} does not match n={n}")
    if lse.lower < 1:
        raise ValidationError("Spectrum minima must be positive colors")

    g = build_multipartite((n, n))
    values = sorted(lse.values)
    assignment = SpectrumAssignment.from_bounds({
        (side, i): (values[i], values[i] + n - 1) for side in (0, 1) for i in range(n)
    })
    result = forced_spectrum_completion(g, assignment)
    if isinstance(result, Infeasible):
        # continuous sequences always admit a coloring
        raise ValidationError(f"Completion failed for continuous sequence {values}")
    return result


