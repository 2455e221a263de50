"""
Interval colorings of the balanced complete multipartite graph K_{n x r}.

Every vertex gets spectrum [1, (r-1)n]. Two blow-ups of the round-robin
1-factorization of K_{2k} cover the feasible cases directly; the completion
engine covers anything else.
"""
import logging
from typing import List, Literal, Tuple

from src.core.constructions.completion import (
    Infeasible,
    SpectrumAssignment,
    forced_spectrum_completion,
)
from src.core.exceptions import InfeasibleError, ValidationError
from src.core.graph import EdgeColoring, build_multipartite

logger = logging.getLogger(__name__)

BalancedMethod = Literal["auto", "blowup", "completion"]


def round_robin_rounds(count: int) -> List[List[Tuple[int, int]]]:
    """
    Circle-method 1-factorization of K_count (count even).

    Round k pairs seq[i] with seq[count-1-i] where seq is 0 followed by
    1..count-1 rotated left by k. Round 0 is (i, count-1-i).
    """
    if count < 2 or count % 2:
        raise ValidationError(f"Round robin needs an even number of players, got {count}")
    others = list(range(1, count))
    rounds = []
    for k in range(count - 1):
        seq = [0] + others[k:] + others[:k]
        rounds.append([(seq[i], seq[count - 1 - i]) for i in range(count // 2)])
    return rounds


def _even_parts_blowup(n: int, r: int) -> EdgeColoring:
    colors = {}
    for k, matching in enumerate(round_robin_rounds(r)):
        for a, b in matching:
            for i in range(n):
                for j in range(n):
                    colors[((a, i), (b, j))] = k * n + (i + j) % n + 1
    return EdgeColoring(colors, (r - 1) * n)


def _half_parts_blowup(n: int, r: int) -> EdgeColoring:
    # half-part h < r is the lower half of part h; h >= r the upper half of part 2r-1-h
    half = n // 2

    def locate(h: int, i: int) -> Tuple[int, int]:
        if h < r:
            return (h, i)
        return (2 * r - 1 - h, half + i)

    colors = {}
    for k, matching in enumerate(round_robin_rounds(2 * r)):
        if k == 0:
            continue  # round 0 pairs the two halves of each part
        for a, b in matching:
            for i in range(half):
                for j in range(half):
                    colors[(locate(a, i), locate(b, j))] = (k - 1) * half + (i + j) % half + 1
    return EdgeColoring(colors, (r - 1) * n)


def _completion(n: int, r: int) -> EdgeColoring:
    g = build_multipartite([n] * r)
    top = (r - 1) * n
    assignment = SpectrumAssignment.from_bounds({v: (1, top) for v in g.vertices})
    result = forced_spectrum_completion(g, assignment)
    if isinstance(result, Infeasible):
        raise InfeasibleError(
            f"No interval {top}-coloring of K_{{{n} x {r}}} found",
            reference="Lemma 2.3"
        )
    return result


def balanced_uniform_coloring(n: int, r: int, method: BalancedMethod = "auto") -> EdgeColoring:
    """
    Interval (r-1)n-coloring of K_{n,...,n} (r parts) with every spectrum [1, (r-1)n].

    Args:
        n: Part size.
        r: Number of parts (>= 2).
        method: "completion" runs the completion engine; "blowup" and "auto"
            use the 1-factorization blow-up, which covers every nr even.

    Raises:
        InfeasibleError: nr is odd.
    """
    if n < 1 or r < 2:
        raise ValidationError(f"Balanced coloring needs n >= 1 and r >= 2, got n={n}, r={r}")
    if method not in ("auto", "blowup", "completion"):
        raise ValidationError(f"Unknown balanced coloring method '{method}'")
    if (n * r) % 2:
        raise InfeasibleError(
            f"K_{{{n} x {r}}} has no interval coloring: nr={n * r} is odd",
            reference="Lemma 2.3"
        )

    if method == "completion":
        logger.info(f"Completing K_{{{n} x {r}}} from prescribed spectra")
        return _completion(n, r)
    if r % 2 == 0:
        return _even_parts_blowup(n, r)
    # nr even and r odd: n is even
    return _half_parts_blowup(n, r)
