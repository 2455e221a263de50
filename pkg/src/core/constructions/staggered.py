"""
Near-balanced families K_{n,...,n,n+1}, K_{n,...,n,n+2} and K_{n,...,n,n+1,n+1}.

All three start from a coloring of K_{n x (r+1)} whose spectra are staggered
intervals, shifted up by one color. The extra vertices w then take, on each
edge, either the color just below or just above the neighbor's spectrum, so
every original vertex keeps an interval and only the w's carry deficiency.

Two staggered layouts exist:
  Case 1 (r odd): parts 2i-1 and 2i share spectra
      [j + (i-1)n, j + (r+i-1)n - 1],  i = 1..(r+1)/2, j = 1..n.
  Case 2 (n even): 2(r+1) half-parts of size n/2 grouped into r+1 parts as
      V1+V3, V(2i)+V(2i+3) for 1 <= i <= r-1, V(2r)+V(2r+2); half-parts
      2i-1 and 2i share spectra [j + (i-1)n/2, j + (2r+i-1)n/2 - 1].
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Literal, Optional, Tuple

from src.core.constructions.completion import (
    Infeasible,
    SpectrumAssignment,
    forced_spectrum_completion,
)
from src.core.exceptions import InfeasibleError, PreconditionError, ValidationError
from src.core.graph import (
    EdgeColoring,
    PartitionedGraph,
    Vertex,
    build_multipartite,
    merge_colorings,
    shift_coloring,
)

logger = logging.getLogger(__name__)

StaggeredCase = Literal[1, 2]

# which side of the neighbor's spectrum a w-edge lands on, for odd half-parts
BELOW_ON_ODD = "below_on_odd"
ABOVE_ON_ODD = "above_on_odd"


@dataclass(frozen=True)
class StaggeredLayout:
    """
    Staggered spectra on K_{n x (r+1)}.

    Vertex j (1-based) of half-part h (1-based) sits at
    (half_parts[h][0], half_parts[h][1] + j - 1). In Case 1 half-parts are
    whole parts and `unit` is n; in Case 2 `unit` is n/2.
    """
    case: int
    n: int
    r: int
    unit: int
    stretch: int
    half_parts: Dict[int, Tuple[int, int]]
    graph: PartitionedGraph
    spectra: SpectrumAssignment

    def vertex(self, h: int, j: int) -> Vertex:
        part, offset = self.half_parts[h]
        return (part, offset + j - 1)

    def members(self) -> Iterator[Tuple[int, int, Vertex]]:
        """(h, j, vertex) over every half-part vertex."""
        for h in sorted(self.half_parts):
            for j in range(1, self.unit + 1):
                yield h, j, self.vertex(h, j)

    def w_color(self, h: int, j: int, shape: str) -> int:
        """Color of the edge from an extra vertex to v_j^(h), after the +1 shift of the base."""
        i = (h + 1) // 2
        below = j + (i - 1) * self.unit
        above = j + (self.stretch + i - 1) * self.unit + 1
        odd = h % 2 == 1
        if shape == BELOW_ON_ODD:
            return below if odd else above
        return above if odd else below


def _layout(n: int, r: int, case: int) -> StaggeredLayout:
    if case == 1:
        unit, stretch = n, r
        half_parts = {h: (h - 1, 0) for h in range(1, r + 2)}
    else:
        unit, stretch = n // 2, 2 * r
        half_parts = {1: (0, 0), 3: (0, unit), 2 * r: (r, 0), 2 * r + 2: (r, unit)}
        for i in range(1, r):
            half_parts[2 * i] = (i, 0)
            half_parts[2 * i + 3] = (i, unit)

    graph = build_multipartite([n] * (r + 1))
    bounds = {}
    for h, (part, offset) in half_parts.items():
        i = (h + 1) // 2
        for j in range(1, unit + 1):
            bounds[(part, offset + j - 1)] = (j + (i - 1) * unit, j + (stretch + i - 1) * unit - 1)
    spectra = SpectrumAssignment.from_bounds(bounds)
    spectra.check_against(graph)
    return StaggeredLayout(case, n, r, unit, stretch, half_parts, graph, spectra)


def staggered_spectra_case1(n: int, r: int) -> SpectrumAssignment:
    """Case 1 staggered spectra on K_{n x (r+1)}; part p holds v^(p+1)."""
    if n < 1 or r < 1:
        raise ValidationError(f"Staggered spectra need n, r >= 1, got n={n}, r={r}")
    if r % 2 == 0:
        raise PreconditionError("r odd", f"Case 1 staggered spectra need r odd, got r={r}")
    return _layout(n, r, 1).spectra


def staggered_spectra_case2(n: int, r: int) -> StaggeredLayout:
    """Case 2 staggered spectra with the half-part grouping on K_{n x (r+1)}."""
    if n < 1 or r < 1:
        raise ValidationError(f"Staggered spectra need n, r >= 1, got n={n}, r={r}")
    if n % 2:
        raise PreconditionError("n even", f"Case 2 staggered spectra need n even, got n={n}")
    return _layout(n, r, 2)


def _resolve_case(n: int, r: int, case: Optional[int]) -> int:
    if (n * (r + 1)) % 2:
        raise PreconditionError("n(r+1) even", f"Construction needs n(r+1) even, got {n * (r + 1)}")
    if case is None:
        return 1 if r % 2 else 2
    if case not in (1, 2):
        raise ValidationError(f"Case must be 1 or 2, got {case}")
    if case == 1 and r % 2 == 0:
        raise PreconditionError("r odd", f"Case 1 needs r odd, got r={r}")
    if case == 2 and n % 2:
        raise PreconditionError("n even", f"Case 2 needs n even, got n={n}")
    return case


def _base(layout: StaggeredLayout) -> EdgeColoring:
    result = forced_spectrum_completion(layout.graph, layout.spectra)
    if isinstance(result, Infeasible):
        raise InfeasibleError(
            f"Staggered spectra on {layout.graph.describe()} admit no coloring",
            reference=f"staggered Case {layout.case}"
        )
    return shift_coloring(result, 1)


def _w_edges(layout: StaggeredLayout, w: Vertex, shape: str, own_part: int) -> Dict:
    return {
        (w, v): layout.w_color(h, j, shape)
        for h, j, v in layout.members()
        if v[0] != own_part
    }


def _check(n: int, r: int) -> None:
    if n < 1 or r < 1:
        raise ValidationError(f"n and r must be positive, got n={n}, r={r}")


def thm5_coloring(n: int, r: int, case: Optional[StaggeredCase] = None) -> EdgeColoring:
    """
    Coloring of K_{n,...,n,n+1} (r parts of size n) with (3r+1)n/2 colors.

    Only w = (r, n) has a gap; def(w) = n(r-1)/2 + 1. `case` picks the
    staggered layout; by default Case 1 when r is odd.
    """
    _check(n, r)
    layout = _layout(n, r, _resolve_case(n, r, case))
    w = (r, n)
    t = (3 * r + 1) * n // 2
    logger.info(f"Staggered Case {layout.case} coloring of K_{{{n} x {r}, {n + 1}}}")
    extra = EdgeColoring(_w_edges(layout, w, BELOW_ON_ODD, r), t)
    return merge_colorings([_base(layout), extra], t=t)


def thm6_coloring(n: int, r: int, case: Optional[StaggeredCase] = None) -> EdgeColoring:
    """
    Coloring of K_{n,...,n,n+2} with (3r+1)n/2 + 1 colors.

    def(w1) = n(r-1)/2 + 1 for w1 = (r, n); def(w2) = n(r+1)/2 + 1 for w2 = (r, n+1).
    """
    _check(n, r)
    layout = _layout(n, r, _resolve_case(n, r, case))
    w1, w2 = (r, n), (r, n + 1)
    t = (3 * r + 1) * n // 2 + 1
    logger.info(f"Staggered Case {layout.case} coloring of K_{{{n} x {r}, {n + 2}}}")
    extra = EdgeColoring(
        {**_w_edges(layout, w1, BELOW_ON_ODD, r), **_w_edges(layout, w2, ABOVE_ON_ODD, r)},
        t
    )
    return merge_colorings([_base(layout), extra], t=t)


def thm7_coloring(n: int, r: int) -> EdgeColoring:
    """
    Coloring of K_{n,...,n,n+1,n+1} (r-1 parts of size n) with (3r+1)n/2 colors.

    w1 = (r-1, n) and w2 = (r, n) each have deficiency n(r-1)/2; w1w2 gets nr + 1.
    """
    _check(n, r)
    if r % 2 == 0 or r < 3:
        raise PreconditionError("r odd, r >= 3", f"Construction needs odd r >= 3, got r={r}")
    layout = _layout(n, r, 1)
    w1, w2 = (r - 1, n), (r, n)
    t = (3 * r + 1) * n // 2
    colors = {
        **_w_edges(layout, w1, ABOVE_ON_ODD, r - 1),
        **_w_edges(layout, w2, BELOW_ON_ODD, r),
        (w1, w2): n * r + 1,
    }
    logger.info(f"Staggered coloring of K_{{{n} x {r - 1}, {n + 1}, {n + 1}}}")
    return merge_colorings([_base(layout), EdgeColoring(colors, t)], t=t)


def thm5_w_deficiency(n: int, r: int) -> int:
    """def(w) under thm5_coloring. With r = 1 the graph is K_{n,n+1} and w has no gap."""
    return 0 if r == 1 else n * (r - 1) // 2 + 1


def thm6_w_deficiencies(n: int, r: int) -> Tuple[int, int]:
    """(def(w1), def(w2)) under thm6_coloring."""
    if r == 1:
        return (0, 0)
    return (n * (r - 1) // 2 + 1, n * (r + 1) // 2 + 1)


def thm7_w_deficiencies(n: int, r: int) -> Tuple[int, int]:
    """(def(w1), def(w2)) under thm7_coloring."""
    return (n * (r - 1) // 2, n * (r - 1) // 2)
