"""
Deficiency bounds for complete multipartite graphs.

Lower bounds come from counting arguments (odd order, divisibility) and
from families known not to be interval colorable; upper bounds from the
constructions; exact values from closed forms for small families. Everything
is reconciled into one BoundReport per size tuple.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from src.core.constructions.registry import registry
from src.core.exceptions import InconsistentBoundsError, ValidationError
from src.core.graph import PartitionedGraph, build_multipartite

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    """The result a bound comes from."""
    NONNEGATIVE = "deficiency is nonnegative"
    GENERAL_ODD = "odd-order bound"
    LEMMA_2_3 = "Lemma 2.3"
    LEMMA_2_4 = "Lemma 2.4"
    THEOREM_2_5 = "Theorem 2.5"
    THEOREM_3_1 = "Theorem 3.1"
    COROLLARY_3_2 = "Corollary 3.2"
    THEOREM_3_3 = "Theorem 3.3"
    THEOREM_3_4 = "Theorem 3.4"
    THEOREM_3_5 = "Theorem 3.5"
    THEOREM_3_6 = "Theorem 3.6"
    THEOREM_3_7 = "Theorem 3.7"
    THEOREM_3_8 = "Theorem 3.8"
    BIPARTITE = "K_{m,n} is interval colorable"
    COMPLETE = "def(K_n)"
    ONE_M_N = "def(K_{1,m,n})"
    COMPLETE_MINUS_EDGE = "def(K_{2n+1} - e)"
    MATCHING_BOUNDS = "lower bound meets upper bound"


class Colorability(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Bound:
    value: int
    source: Provenance


@dataclass(frozen=True)
class BoundReport:
    """
    Lower, upper and (when known) exact deficiency with their provenance.

    Raises InconsistentBoundsError on construction if the pieces contradict
    each other; that always indicates a bug.
    """
    sizes: Tuple[int, ...]
    lower: Bound
    upper: Bound
    exact: Optional[Bound] = None
    interval_colorable: Colorability = Colorability.UNKNOWN
    span_range: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        details = {"sizes": list(self.sizes), "lower": self.lower.value, "upper": self.upper.value}
        if self.lower.value > self.upper.value:
            raise InconsistentBoundsError(
                f"Lower bound {self.lower.value} ({self.lower.source.value}) exceeds "
                f"upper bound {self.upper.value} ({self.upper.source.value})",
                details=details
            )
        if self.exact is not None:
            if not self.lower.value <= self.exact.value <= self.upper.value:
                raise InconsistentBoundsError(
                    f"Exact value {self.exact.value} ({self.exact.source.value}) outside "
                    f"[{self.lower.value}, {self.upper.value}]",
                    details={**details, "exact": self.exact.value}
                )
            if (self.exact.value == 0) != (self.interval_colorable is Colorability.YES):
                raise InconsistentBoundsError(
                    "Exact deficiency and interval colorability disagree", details=details
                )

    def to_dict(self) -> dict:
        def pack(bound: Optional[Bound]) -> Optional[dict]:
            if bound is None:
                return None
            return {"value": bound.value, "source": bound.source.value}

        return {
            "sizes": list(self.sizes),
            "lower": pack(self.lower),
            "upper": pack(self.upper),
            "exact": pack(self.exact),
            "interval_colorable": self.interval_colorable.value,
            "span_range": list(self.span_range) if self.span_range else None,
        }


# ============================================
# Lower bounds
# ============================================

def general_odd_lower_bound(g: PartitionedGraph) -> Optional[int]:
    """
    max(0, ceil((2|E| - (|V|-1)Δ) / 2)) for graphs of odd order; None otherwise.

    In an interval coloring of an odd-order graph some color class misses a
    vertex at every color, which forces the pendant count above.
    """
    order = g.num_vertices
    if order % 2 == 0:
        return None
    excess = 2 * g.num_edges - (order - 1) * g.max_degree
    return max(0, -(-excess // 2))


def multipartite_lower_bound(sizes: Sequence[int]) -> Optional[int]:
    """
    Lower bound for K_{n_1,...,n_r} with r >= 3 and odd order; None otherwise.

    With sizes sorted so that n_1 is smallest:
    sum over i >= 2 of ((n_1 + 1) n_i - n_i^2) / 2, rounded up and clamped at 0.
    """
    if len(sizes) < 3 or sum(sizes) % 2 == 0:
        return None
    ordered = sorted(sizes)
    smallest = ordered[0]
    total = sum((smallest + 1) * size - size * size for size in ordered[1:])
    return max(0, -(-total // 2))


def divisibility_obstruction(g: PartitionedGraph) -> Optional[int]:
    """gcd d of all degrees when d does not divide |E|; such a d rules out interval colorings."""
    d = reduce(gcd, (g.degree(v) for v in g.vertices))
    if d > 1 and g.num_edges % d:
        return d
    return None


def not_interval_colorable(sizes: Sequence[int]) -> Optional[Provenance]:
    """Families known to admit no interval coloring."""
    balanced = registry.get("lemma3").match(sizes)
    if balanced is not None and (balanced["n"] * balanced["r"]) % 2:
        return Provenance.LEMMA_2_3
    join = registry.get("thm4").match(sizes)
    if join is not None and not registry.get("thm4").feasible(join):
        return Provenance.THEOREM_3_4
    return None


# ============================================
# Upper bounds and exact values
# ============================================

_THEOREM_METHODS = (
    ("lemma3", Provenance.LEMMA_2_3),
    ("thm3", Provenance.THEOREM_3_3),
    ("thm4", Provenance.THEOREM_3_4),
    ("thm5", Provenance.THEOREM_3_5),
    ("thm6", Provenance.THEOREM_3_6),
    ("thm7", Provenance.THEOREM_3_7),
    ("thm8", Provenance.THEOREM_3_8),
)


def upper_bound_candidates(sizes: Sequence[int]) -> List[Bound]:
    """Every applicable upper bound, in preference order."""
    if len(sizes) < 2:
        raise ValidationError(f"Need at least 2 parts, got {len(sizes)}")
    candidates = []
    if len(sizes) == 2:
        candidates.append(Bound(0, Provenance.BIPARTITE))
    for name, source in _THEOREM_METHODS:
        params = registry.find(sizes, name)
        if params is not None:
            candidates.append(Bound(registry.get(name).expected_deficiency(params), source))
    if len(sizes) == 3:
        candidates.append(Bound(min(size * size for size in sizes), Provenance.COROLLARY_3_2))
    if len(sizes) >= 3:
        shifted = registry.get("thm2")
        params = shifted.match(sizes)
        assert params is not None
        candidates.append(Bound(shifted.expected_deficiency(params), Provenance.THEOREM_3_1))
    return candidates


def upper_bound(sizes: Sequence[int]) -> Bound:
    """Smallest applicable upper bound; ties go to the earlier result."""
    candidates = upper_bound_candidates(sizes)
    best = candidates[0]
    for candidate in candidates[1:]:
        if candidate.value < best.value:
            best = candidate
    return best


def bipartite_span_range(m: int, n: int) -> Tuple[int, int]:
    """K_{m,n} has an interval t-coloring exactly for m + n - gcd(m, n) <= t <= m + n - 1."""
    if m < 1 or n < 1:
        raise ValidationError(f"Part sizes must be positive, got ({m}, {n})")
    return (m + n - gcd(m, n), m + n - 1)


def near_complete_exact(sizes: Sequence[int]) -> Optional[int]:
    """def(K_{2n+1} - e) = n - 1, read as K_{1,...,1,2} with 2n - 1 singleton parts."""
    ordered = sorted(sizes)
    ones = len(ordered) - 1
    if ordered[-1] != 2 or any(size != 1 for size in ordered[:-1]) or ones % 2 == 0:
        return None
    return (ones + 1) // 2 - 1


def known_exact(sizes: Sequence[int]) -> Optional[Bound]:
    """Exact deficiency from a closed form, when one covers `sizes`."""
    r = len(sizes)
    if r < 2:
        raise ValidationError(f"Need at least 2 parts, got {r}")
    if all(size == 1 for size in sizes):
        return Bound(0 if r % 2 == 0 else (r - 1) // 2, Provenance.COMPLETE)
    if r == 2:
        return Bound(0, Provenance.BIPARTITE)
    ordered = sorted(sizes)
    if r == 3 and ordered[0] == 1:
        m, n = ordered[1], ordered[2]
        return Bound(0 if gcd(m + 1, n + 1) == 1 else 1, Provenance.ONE_M_N)
    value = near_complete_exact(sizes)
    if value is not None:
        return Bound(value, Provenance.COMPLETE_MINUS_EDGE)
    if registry.find(sizes, "lemma3") is not None:
        return Bound(0, Provenance.LEMMA_2_3)
    if registry.find(sizes, "thm3") is not None:
        return Bound(0, Provenance.THEOREM_3_3)
    if registry.find(sizes, "thm4") is not None:
        return Bound(0, Provenance.THEOREM_3_4)
    return None


def lower_bound_candidates(sizes: Sequence[int]) -> List[Bound]:
    g = build_multipartite(sizes)
    candidates = [Bound(0, Provenance.NONNEGATIVE)]
    value = multipartite_lower_bound(sizes)
    if value is not None:
        candidates.append(Bound(value, Provenance.LEMMA_2_4))
    value = general_odd_lower_bound(g)
    if value is not None:
        candidates.append(Bound(value, Provenance.GENERAL_ODD))
    if divisibility_obstruction(g) is not None:
        candidates.append(Bound(1, Provenance.THEOREM_2_5))
    fact = not_interval_colorable(sizes)
    if fact is not None:
        candidates.append(Bound(1, fact))
    return candidates


def deficiency_report(sizes: Sequence[int]) -> BoundReport:
    """Combine every bound that applies to K_{sizes}."""
    sizes = tuple(sizes)
    lower = Bound(0, Provenance.NONNEGATIVE)
    for candidate in lower_bound_candidates(sizes):
        if candidate.value > lower.value:
            lower = candidate
    upper = upper_bound(sizes)

    exact = known_exact(sizes)
    if exact is None and lower.value == upper.value:
        exact = Bound(upper.value, Provenance.MATCHING_BOUNDS)

    if exact is not None:
        colorable = Colorability.YES if exact.value == 0 else Colorability.NO
    elif lower.value >= 1:
        colorable = Colorability.NO
    elif upper.value == 0:
        colorable = Colorability.YES
    else:
        colorable = Colorability.UNKNOWN

    span = bipartite_span_range(*sizes) if len(sizes) == 2 else None
    report = BoundReport(sizes, lower, upper, exact, colorable, span)
    logger.info(
        f"Bounds for K_{{{','.join(map(str, sizes))}}}: "
        f"{lower.value} <= def <= {upper.value}, exact={exact.value if exact else None}"
    )
    return report
