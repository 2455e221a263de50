"""
Interval colorings of K_{n,...,n,trn} and K_{n,...,n,(tr+1)n}.

Both graphs split into a balanced multipartite piece H1 and a complete
bipartite piece H2 between the small parts and (part of) the big part. H1
gets the balanced coloring, H2 the block coloring shifted past H1's colors.
"""
import logging
from typing import Callable

from src.core.constructions.bipartite import block_bipartite_coloring
from src.core.constructions.uniform import balanced_uniform_coloring
from src.core.exceptions import InfeasibleError, PreconditionError, ValidationError
from src.core.graph import EdgeColoring, Node, merge_colorings, relabel

logger = logging.getLogger(__name__)


def _check_positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise ValidationError(f"{name} must be a positive integer, got {value!r}")


def _h2_mapping(r: int, n: int, offset: int) -> Callable[[Node], Node]:
    """Block-coloring left k -> small part k // n; right j -> big part r, index offset + j."""
    def mapping(v: Node) -> Node:
        side, k = v  # type: ignore[misc]
        if side == 0:
            return (k // n, k % n)
        return (r, offset + k)
    return mapping


def thm3_coloring(n: int, r: int, t: int) -> EdgeColoring:
    """
    Interval (tr + r - 1)n-coloring of K_{n,...,n,trn} with r parts of size n.

    Every small-part vertex sees [1, (tr + r - 1)n].
    """
    _check_positive(n=n, r=r, t=t)
    if (n * r) % 2:
        raise PreconditionError("nr even", f"K_{{n x r, trn}} construction needs nr even, got nr={n * r}")

    total = (t * r + r - 1) * n
    pieces = []
    if r >= 2:
        pieces.append(balanced_uniform_coloring(n, r))
    h2 = block_bipartite_coloring(r * n, t)
    pieces.append(relabel(h2, _h2_mapping(r, n, 0), offset=(r - 1) * n))

    logger.info(f"Join coloring of K_{{{n} x {r}, {t * r * n}}} with {total} colors")
    return merge_colorings(pieces, t=total)


def thm4_feasible(n: int, r: int) -> bool:
    """K_{n,...,n,(tr+1)n} is interval colorable iff n(r+1) is even."""
    return (n * (r + 1)) % 2 == 0


def thm4_coloring(n: int, r: int, t: int) -> EdgeColoring:
    """
    Interval (t + 1)rn-coloring of K_{n,...,n,(tr+1)n} with r parts of size n.

    The first n vertices of the big part form the (r+1)-th part of H1; the
    remaining trn vertices form the right side of H2.

    Raises:
        InfeasibleError: n(r+1) is odd; degrees are then all divisible by nr
            while the edge count is not.
    """
    _check_positive(n=n, r=r, t=t)
    if not thm4_feasible(n, r):
        raise InfeasibleError(
            f"K_{{{n} x {r}, {(t * r + 1) * n}}} has no interval coloring: n(r+1)={n * (r + 1)} is odd",
            reference="Theorem 3.4"
        )

    total = (t + 1) * r * n
    h1 = balanced_uniform_coloring(n, r + 1)
    h2 = block_bipartite_coloring(r * n, t)
    pieces = [h1, relabel(h2, _h2_mapping(r, n, n), offset=r * n)]

    logger.info(f"Join coloring of K_{{{n} x {r}, {(t * r + 1) * n}}} with {total} colors")
    return merge_colorings(pieces, t=total)
