"""
K_{l,m,n} and K_{l,m,n,l+m+n}.
"""
import logging
from typing import Dict

from src.core.constructions.completion import prescribed_lse_knn
from src.core.exceptions import PreconditionError, ValidationError
from src.core.graph import (
    ContinuousSequence,
    EdgeColoring,
    Node,
    PendantLeaf,
    build_multipartite,
    merge_colorings,
    node_key,
    relabel,
)

logger = logging.getLogger(__name__)

W, U, V, T = 0, 1, 2, 3


def _check_sizes(l: int, m: int, n: int) -> None:  # noqa: E741
    if min(l, m, n) < 1:
        raise ValidationError(f"Part sizes must be positive, got ({l}, {m}, {n})")
    if not l <= m <= n:
        raise PreconditionError("l <= m <= n", f"Sizes ({l}, {m}, {n}) must satisfy l <= m <= n")


def klmn_alpha(l: int, m: int, n: int) -> EdgeColoring:  # noqa: E741
    """
    Coloring of K_{l,m,n} with parts W (0), U (1), V (2).

    u_i v_j -> l+i+j-1, w_p v_j -> p+j-1, u_i w_p -> l+n+i+p-1 (1-based i, j, p).
    U and V get intervals; each w_p gets [p, p+n-1] plus [p+l+n, p+l+n+m-1],
    a gap of l.
    """
    _check_sizes(l, m, n)
    colors = {}
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            colors[((U, i - 1), (V, j - 1))] = l + i + j - 1
        for p in range(1, l + 1):
            colors[((W, p - 1), (V, j - 1))] = p + j - 1
    for i in range(1, m + 1):
        for p in range(1, l + 1):
            colors[((W, p - 1), (U, i - 1))] = l + n + i + p - 1
    return EdgeColoring(colors, max(colors.values()))


def thm8_coloring(l: int, m: int, n: int) -> EdgeColoring:  # noqa: E741
    """
    Coloring of K_{l,m,n,l+m+n} with deficiency l^2.

    The K_{l,m,n} part keeps klmn_alpha. Between W+U+V and T sits a K_{N,N}
    (N = l+m+n) where each z of W+U+V starts its spectrum right after its
    largest alpha color; T vertices take the same starting colors in sorted order.
    """
    _check_sizes(l, m, n)
    size = l + m + n
    alpha = klmn_alpha(l, m, n)
    small = build_multipartite((l, m, n))

    top: Dict[Node, int] = {}
    for (a, b), color in alpha.colors.items():
        top[a] = max(top.get(a, 0), color)
        top[b] = max(top.get(b, 0), color)
    ordered = sorted(small.vertices, key=lambda z: (top[z], node_key(z)))
    starts = ContinuousSequence(tuple(top[z] + 1 for z in ordered))

    h2 = prescribed_lse_knn(size, starts)

    def mapping(v: Node) -> Node:
        assert not isinstance(v, PendantLeaf)
        side, k = v
        return ordered[k] if side == 0 else (T, k)

    total = max(alpha.max_color, h2.max_color)
    logger.info(f"Four-part coloring of K_{{{l},{m},{n},{size}}} with {total} colors")
    return merge_colorings([alpha, relabel(h2, mapping, t=total)], t=total)
