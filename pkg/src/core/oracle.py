"""
Exhaustive search for interval colorings and exact deficiency.

Colors are searched relative to the first edge in search order, which is
fixed to 0; a finished coloring is translated so its smallest color is 1.
The second edge touches the first, so its color is nonzero and, up to
reflecting every color, positive. Each positive color of the second edge is
one top-level branch with its own node budget. The answer is taken from the
first branch in ascending order that is not infeasible, so sequential and
pooled runs agree exactly.

A vertex whose colors so far span s with degree d will end with deficiency
at least s - d. The search prunes as soon as these bounds sum past the
target deficiency D.

Palette bound: a coloring of minimum deficiency can be taken to use every
color between its smallest and largest. Deleting an unused color c and
lowering every color above c by one keeps the coloring proper and never
widens a spectrum. So t <= |E| suffices.

Deepening starts at the best proven lower bound from src.core.bounds, so
only targets that can still succeed are searched.
"""
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Set, Tuple

from src.core.bounds import deficiency_report, divisibility_obstruction, general_odd_lower_bound
from src.core.config import settings
from src.core.exceptions import BudgetExhaustedError, ValidationError
from src.core.graph import (
    Edge,
    EdgeColoring,
    PartitionedGraph,
    Vertex,
    attach_pendants,
    edge_key,
)

logger = logging.getLogger(__name__)

FOUND = "found"
INFEASIBLE = "infeasible"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one oracle call. max_colors=None means max(|E|, Δ)."""
    max_colors: Optional[int] = None
    deficiency_cap: int = field(default_factory=lambda: settings.oracle.deficiency_cap)
    node_limit: Optional[int] = field(default_factory=lambda: settings.oracle.node_limit)

    def __post_init__(self):
        if self.deficiency_cap < 0:
            raise ValidationError(f"deficiency_cap must be >= 0, got {self.deficiency_cap}")
        if self.max_colors is not None and self.max_colors < 1:
            raise ValidationError(f"max_colors must be positive, got {self.max_colors}")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValidationError(f"node_limit must be positive, got {self.node_limit}")

    def palette(self, g: PartitionedGraph) -> int:
        t = self.max_colors if self.max_colors is not None else max(g.num_edges, g.max_degree)
        if t < g.max_degree:
            raise ValidationError(f"max_colors={t} is below the maximum degree {g.max_degree}")
        return t

    @property
    def nodes(self) -> int:
        return self.node_limit if self.node_limit is not None else sys.maxsize


class VerdictStatus(str, Enum):
    EXACT = "exact"
    EXHAUSTED = "exhausted"
    CAPPED = "capped"


@dataclass(frozen=True)
class OracleVerdict:
    """
    Outcome of an exact deficiency search.

    `lower` is proven in every status: no coloring has deficiency below it.
    EXACT carries `value` and a witness attaining it; EXHAUSTED means the
    node budget ran out while testing deficiency `lower`; CAPPED means every
    deficiency up to the cap was refuted.
    """
    status: VerdictStatus
    value: Optional[int]
    witness: Optional[EdgeColoring]
    lower: int
    nodes: int

    @property
    def is_exact(self) -> bool:
        return self.status is VerdictStatus.EXACT


@dataclass(frozen=True)
class _Outcome:
    status: str
    nodes: int
    colors: Optional[Tuple[int, ...]] = None  # in search_order, smallest color 1


class _Exhausted(Exception):
    pass


def search_order(g: PartitionedGraph) -> List[Edge]:
    """
    Connected edge order: start at the heaviest edge (largest endpoint degree sum),
    then repeatedly take a frontier edge, preferring edges with both endpoints
    already reached, then heavier edges, then canonical order.
    """
    weight = {v: g.degree(v) for v in g.vertices}
    edges = list(g.edges)
    first = min(edges, key=lambda e: (-(weight[e[0]] + weight[e[1]]), edge_key(e)))
    order = [first]
    reached = {first[0], first[1]}
    remaining = set(edges)
    remaining.discard(first)
    while remaining:
        nxt = min(
            (e for e in remaining if e[0] in reached or e[1] in reached),
            key=lambda e: (
                -((e[0] in reached) + (e[1] in reached)),
                -(weight[e[0]] + weight[e[1]]),
                edge_key(e),
            ),
        )
        order.append(nxt)
        reached.update(nxt)
        remaining.discard(nxt)
    return order


class _DeficiencySearch:
    """Depth-first search over relative colors with undo."""

    def __init__(
        self,
        g: PartitionedGraph,
        deficiency: int,
        span_limit: int,
        exact_span: Optional[int],
        node_limit: int,
    ):
        self.order = search_order(g)
        vertices = list(g.vertices)
        index = {v: k for k, v in enumerate(vertices)}
        self.degree = [g.degree(v) for v in vertices]
        self.ends = [(index[a], index[b]) for a, b in self.order]
        self.deficiency = deficiency
        self.span_limit = span_limit
        self.exact_span = exact_span
        self.node_limit = node_limit
        self.nodes = 0

        self.lo: List[Optional[int]] = [None] * len(vertices)
        self.hi: List[Optional[int]] = [None] * len(vertices)
        self.used: List[Set[int]] = [set() for _ in vertices]
        self.total = 0
        self.gmin: Optional[int] = None
        self.gmax: Optional[int] = None
        self.colors = [0] * len(self.order)

    def _bound(self, x: int, lo: int, hi: int) -> int:
        return max(0, hi - lo + 1 - self.degree[x])

    def _delta(self, x: int, c: int) -> int:
        lo, hi = self.lo[x], self.hi[x]
        if lo is None or hi is None:
            return 0
        return self._bound(x, min(lo, c), max(hi, c)) - self._bound(x, lo, hi)

    def candidates(self, k: int) -> List[int]:
        a, b = self.ends[k]
        lows: List[int] = []
        highs: List[int] = []
        for x in (a, b):
            lo, hi = self.lo[x], self.hi[x]
            if lo is None or hi is None:
                continue
            reach = self.degree[x] + self.deficiency - self.total + self._bound(x, lo, hi)
            lows.append(hi - reach + 1)
            highs.append(lo + reach - 1)
        if self.gmin is not None and self.gmax is not None:
            lows.append(self.gmax - self.span_limit + 1)
            highs.append(self.gmin + self.span_limit - 1)
        if not lows:
            return [0]

        out = []
        for c in range(max(lows), min(highs) + 1):
            if c in self.used[a] or c in self.used[b]:
                continue
            if self.total + self._delta(a, c) + self._delta(b, c) > self.deficiency:
                continue
            out.append(c)
        return out

    def assign(self, k: int, c: int) -> Tuple:
        a, b = self.ends[k]
        token = (self.lo[a], self.hi[a], self.lo[b], self.hi[b], self.total, self.gmin, self.gmax)
        for x in (a, b):
            self.total += self._delta(x, c)
            lo, hi = self.lo[x], self.hi[x]
            self.lo[x] = c if lo is None else min(lo, c)
            self.hi[x] = c if hi is None else max(hi, c)
            self.used[x].add(c)
        self.gmin = c if self.gmin is None else min(self.gmin, c)
        self.gmax = c if self.gmax is None else max(self.gmax, c)
        self.colors[k] = c
        return token

    def undo(self, k: int, token: Tuple) -> None:
        a, b = self.ends[k]
        c = self.colors[k]
        self.used[a].discard(c)
        self.used[b].discard(c)
        self.lo[a], self.hi[a], self.lo[b], self.hi[b], self.total, self.gmin, self.gmax = token

    def extend(self, k: int) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _Exhausted()
        if k == len(self.ends):
            if self.exact_span is None:
                return True
            assert self.gmin is not None and self.gmax is not None
            return self.gmax - self.gmin + 1 == self.exact_span
        for c in self.candidates(k):
            token = self.assign(k, c)
            if self.extend(k + 1):
                return True
            self.undo(k, token)
        return False

    def normalized(self) -> Tuple[int, ...]:
        low = min(self.colors)
        return tuple(c - low + 1 for c in self.colors)


def _run_branch(
    parts: Tuple[int, ...],
    pendants: Tuple[Tuple[Vertex, int], ...],
    deficiency: int,
    span_limit: int,
    exact_span: Optional[int],
    second: Optional[int],
    node_limit: int,
) -> _Outcome:
    """One top-level branch. Module-level so pool workers can pickle it."""
    g = PartitionedGraph(parts, pendants)
    search = _DeficiencySearch(g, deficiency, span_limit, exact_span, node_limit)
    search.assign(0, 0)
    start = 1
    if second is not None:
        search.assign(1, second)
        start = 2
    try:
        found = search.extend(start)
    except _Exhausted:
        return _Outcome(EXHAUSTED, search.nodes)
    if found:
        return _Outcome(FOUND, search.nodes, search.normalized())
    return _Outcome(INFEASIBLE, search.nodes)


def _solve(
    g: PartitionedGraph,
    deficiency: int,
    span_limit: int,
    exact_span: Optional[int],
    node_limit: int,
    workers: int,
) -> _Outcome:
    root = _DeficiencySearch(g, deficiency, span_limit, exact_span, node_limit)
    root.assign(0, 0)
    if len(root.order) == 1:
        branches: List[Optional[int]] = [None]
    else:
        branches = [c for c in root.candidates(1) if c > 0]

    tasks = [
        (g.parts, g.pendants, deficiency, span_limit, exact_span, second, node_limit)
        for second in branches
    ]
    nodes = 0
    if workers > 1 and len(tasks) > 1:
        with Pool(processes=min(workers, len(tasks))) as pool:
            results = pool.starmap(_run_branch, tasks)
    else:
        results = []
        for task in tasks:
            results.append(_run_branch(*task))
            if results[-1].status != INFEASIBLE:
                break

    for outcome in results:
        nodes += outcome.nodes
        if outcome.status != INFEASIBLE:
            return _Outcome(outcome.status, nodes, outcome.colors)
    return _Outcome(INFEASIBLE, nodes)


def _witness(g: PartitionedGraph, outcome: _Outcome) -> EdgeColoring:
    assert outcome.colors is not None
    return EdgeColoring(dict(zip(search_order(g), outcome.colors)), max(outcome.colors))


def proven_lower_bound(g: PartitionedGraph) -> int:
    """
    Largest deficiency lower bound known without search.

    Plain graphs take the full bound report. Graphs with pendant edges use
    the bounds that hold for any graph: the odd-order count and the
    divisibility obstruction.
    """
    if not g.pendants:
        return deficiency_report(g.parts).lower.value
    lower = general_odd_lower_bound(g) or 0
    if divisibility_obstruction(g) is not None:
        lower = max(lower, 1)
    return lower


def exact_deficiency(
    g: PartitionedGraph,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
    from_lower_bound: bool = True,
) -> OracleVerdict:
    """
    def(g) by iterative deepening on the target deficiency D.

    D starts at proven_lower_bound(g), or at 0 when from_lower_bound is
    False. Colors range over at most budget.palette(g) values.
    """
    budget = budget or SearchBudget()
    span_limit = budget.palette(g)
    seed = proven_lower_bound(g) if from_lower_bound else 0
    if seed:
        logger.debug(f"{g.describe()}: deficiency {seed - 1} and below ruled out by bounds")
    if seed > budget.deficiency_cap:
        logger.info(f"def({g.describe()}) >= {seed} exceeds the cap {budget.deficiency_cap}")
        return OracleVerdict(VerdictStatus.CAPPED, None, None, seed, 0)
    nodes = 0
    for target in range(seed, budget.deficiency_cap + 1):
        outcome = _solve(g, target, span_limit, None, budget.nodes, workers)
        nodes += outcome.nodes
        if outcome.status == FOUND:
            logger.info(f"def({g.describe()}) = {target} ({nodes} nodes)")
            return OracleVerdict(VerdictStatus.EXACT, target, _witness(g, outcome), target, nodes)
        if outcome.status == EXHAUSTED:
            logger.warning(f"Node limit reached on {g.describe()} while testing deficiency {target}")
            return OracleVerdict(VerdictStatus.EXHAUSTED, None, None, target, nodes)
        logger.debug(f"{g.describe()}: no coloring with deficiency {target}")

    cap = budget.deficiency_cap
    logger.info(f"def({g.describe()}) exceeds the cap {cap}")
    return OracleVerdict(VerdictStatus.CAPPED, None, None, cap + 1, nodes)


def exact_interval_spans(
    g: PartitionedGraph,
    max_colors: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> Dict[int, EdgeColoring]:
    """
    Every t in [Δ, max_colors] for which g has an interval t-coloring, with a witness each.

    max_colors defaults to |E|. For bipartite g it is also capped at |V| - 1.

    Raises:
        BudgetExhaustedError: some t could not be decided within the node limit.
    """
    budget = budget or SearchBudget()
    delta = g.max_degree
    limit = max_colors if max_colors is not None else g.num_edges
    if limit < delta:
        raise ValidationError(f"max_colors={limit} is below the maximum degree {delta}")
    if g.num_parts == 2:
        limit = min(limit, g.num_vertices - 1)

    spans: Dict[int, EdgeColoring] = {}
    for t in range(delta, limit + 1):
        outcome = _solve(g, 0, t, t, budget.nodes, workers)
        if outcome.status == EXHAUSTED:
            raise BudgetExhaustedError(
                f"Could not decide interval {t}-colorability of {g.describe()}", nodes=outcome.nodes
            )
        if outcome.status == FOUND:
            spans[t] = _witness(g, outcome)
    logger.info(f"Interval spans of {g.describe()}: {sorted(spans)}")
    return spans


def _partitions(total: int, max_parts: int, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing tuples of positive integers summing to `total`, at most `max_parts` long."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    top = total if cap is None else min(cap, total)
    for first in range(top, 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def attachment_classes(g: PartitionedGraph, k: int) -> Iterator[Dict[Vertex, int]]:
    """
    One representative per symmetry class of ways to attach k pendant edges.

    Vertices within a part are interchangeable, and so are parts of equal size
    when g has no pendants yet.
    """
    seen = set()
    for split in _compositions(k, g.num_parts):
        options = [list(_partitions(split[p], g.parts[p])) for p in range(g.num_parts)]
        for choice in product(*options):
            if g.pendants:
                key = tuple(enumerate(choice))
            else:
                key = tuple(sorted((g.parts[p], choice[p]) for p in range(g.num_parts)))
            if key in seen:
                continue
            seen.add(key)
            yield {
                (p, i): count
                for p, counts in enumerate(choice)
                for i, count in enumerate(counts)
            }


def pendant_deficiency(
    g: PartitionedGraph,
    k_max: int,
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> Optional[int]:
    """
    Smallest k <= k_max such that attaching k pendant edges makes g interval colorable.

    Returns None when no k <= k_max works. The smallest such k is def(g), so
    k starts at proven_lower_bound(g), and attachments that carry the
    divisibility obstruction or a positive odd-order bound are skipped.

    Raises:
        BudgetExhaustedError: some attachment could not be decided and no
            smaller k succeeded.
    """
    if k_max < 0:
        raise ValidationError(f"k_max must be >= 0, got {k_max}")
    budget = budget or SearchBudget()
    seed = proven_lower_bound(g)
    if seed > k_max:
        logger.info(f"{g.describe()} needs at least {seed} pendant edge(s), more than {k_max}")
        return None
    for k in range(seed, k_max + 1):
        undecided = 0
        for counts in attachment_classes(g, k):
            h = attach_pendants(g, counts)
            if divisibility_obstruction(h) is not None or general_odd_lower_bound(h):
                logger.debug(f"Skipping {h.describe()}: not interval colorable by bounds")
                continue
            outcome = _solve(h, 0, max(h.num_edges, h.max_degree), None, budget.nodes, workers)
            if outcome.status == FOUND:
                logger.info(f"{g.describe()} becomes interval colorable with {k} pendant edge(s)")
                return k
            if outcome.status == EXHAUSTED:
                undecided += 1
        if undecided:
            raise BudgetExhaustedError(
                f"{undecided} attachment(s) of {k} pendant edge(s) to {g.describe()} undecided"
            )
    return None
