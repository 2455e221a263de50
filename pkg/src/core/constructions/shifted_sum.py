"""
Shifted-sum coloring of an arbitrary complete multipartite graph.

Vertices are numbered globally 1..N part after part; the edge between global
indices i and j gets color 1 + i + j - s, where s is the smallest index sum
over an edge. With the parts ordered largest, then nonincreasing, then the
second largest last, only the middle parts carry deficiency.
"""
import logging
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from src.core.exceptions import PreconditionError
from src.core.graph import EdgeColoring, Vertex, build_multipartite

logger = logging.getLogger(__name__)

ORDERING_HYPOTHESIS = "n_1 >= n_r >= n_2 >= ... >= n_{r-1}"


def canonical_order(sizes: Sequence[int]) -> Tuple[int, ...]:
    """
    Largest size first, second largest last, the rest nonincreasing in between.

    Equal sizes keep their input order.
    """
    if len(sizes) < 3:
        raise PreconditionError("r >= 3", f"Canonical order needs at least 3 parts, got {len(sizes)}")
    ranked = sorted(range(len(sizes)), key=lambda k: (-sizes[k], k))
    first, last, middle = ranked[0], ranked[1], ranked[2:]
    return tuple(sizes[k] for k in [first, *middle, last])


def satisfies_ordering(sizes: Sequence[int]) -> bool:
    if len(sizes) < 3:
        return False
    chain = [sizes[0], sizes[-1], *sizes[1:-1]]
    return all(a >= b for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class ShiftedSumLayout:
    """Ordered part sizes with their cumulative sums and extreme index sums."""
    ordered_sizes: Tuple[int, ...]
    sigma: Tuple[int, ...] = field(init=False)
    s_min: int = field(init=False)
    s_max: int = field(init=False)

    def __post_init__(self):
        sizes = tuple(self.ordered_sizes)
        if not satisfies_ordering(sizes):
            raise PreconditionError(
                ORDERING_HYPOTHESIS,
                f"Sizes {sizes} violate the shifted-sum ordering {ORDERING_HYPOTHESIS}"
            )
        sigma = [0]
        for size in sizes:
            sigma.append(sigma[-1] + size)
        object.__setattr__(self, "ordered_sizes", sizes)
        object.__setattr__(self, "sigma", tuple(sigma))
        object.__setattr__(self, "s_min", sizes[0] + 2)
        object.__setattr__(self, "s_max", sigma[-1] + sigma[-2])

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "ShiftedSumLayout":
        """Layout of the canonical ordering of an unordered size multiset."""
        return cls(canonical_order(sizes))

    @property
    def t(self) -> int:
        return 1 + self.s_max - self.s_min

    def global_index(self, v: Vertex) -> int:
        """1-based position of v in the part-after-part numbering."""
        return self.sigma[v[0]] + v[1] + 1

    def expected_deficiency(self) -> int:
        return sum(size * size for size in self.ordered_sizes[1:-1])


def shifted_sum_coloring(layout: ShiftedSumLayout) -> EdgeColoring:
    """Proper coloring with 1 + S - s colors and deficiency sum of n_l^2 over middle parts."""
    g = build_multipartite(layout.ordered_sizes)
    colors = {
        (u, v): 1 + layout.global_index(u) + layout.global_index(v) - layout.s_min
        for u, v in g.edges
    }
    logger.info(
        f"Shifted-sum coloring of {g.describe()}: t={layout.t}, "
        f"deficiency {layout.expected_deficiency()}"
    )
    return EdgeColoring(colors, layout.t)
