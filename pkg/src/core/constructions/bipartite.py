"""
Block coloring of K_{n,nm}.
"""
import logging

from src.core.exceptions import ValidationError
from src.core.graph import EdgeColoring

logger = logging.getLogger(__name__)


def block_bipartite_coloring(n: int, m: int) -> EdgeColoring:
    """
    Interval nm-coloring of K_{n,nm} in which every left vertex sees [1, nm].

    Part 0 is the left side (n vertices); part 1 holds m blocks of n vertices,
    block b occupying indices b*n .. b*n + n - 1. Block b is a Latin square on
    colors b*n + 1 .. b*n + n.
    """
    if n < 1 or m < 1:
        raise ValidationError(f"Block coloring needs n, m >= 1, got n={n}, m={m}")

    colors = {}
    for i in range(n):
        for b in range(m):
            for j in range(n):
                colors[((0, i), (1, b * n + j))] = b * n + (i + j) % n + 1
    logger.debug(f"Block coloring of K_{{{n},{n * m}}} with {n * m} colors")
    return EdgeColoring(colors, n * m)
