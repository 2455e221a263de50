"""
Graphviz DOT export of colored multipartite graphs.
"""
import logging
from pathlib import Path
from typing import Optional, Union

import graphviz

from src.core.graph import EdgeColoring, Node, PartitionedGraph, PendantLeaf, vertex_spectrum

logger = logging.getLogger(__name__)

# cycled per part
PART_FILLS = ("lightblue", "lightyellow", "lightgreen", "lightpink", "lightcyan", "wheat")


def node_id(node: Node) -> str:
    if isinstance(node, PendantLeaf):
        return f"l{node.anchor[0]}_{node.anchor[1]}_{node.ordinal}"
    return f"v{node[0]}_{node[1]}"


def to_graphviz(g: PartitionedGraph, c: Optional[EdgeColoring] = None) -> graphviz.Graph:
    """
    Build an undirected graphviz graph with one cluster per part.

    With a coloring, edges carry their color as label and each vertex shows its spectrum.
    """
    dot = graphviz.Graph(comment=f"Coloring of {g.describe()}", engine="dot")
    dot.attr(rankdir="LR", bgcolor="white", fontname="Arial")
    dot.attr("node", shape="circle", style="filled", fontname="Arial", fontsize="10")

    for p in range(g.num_parts):
        fill = PART_FILLS[p % len(PART_FILLS)]
        with dot.subgraph(name=f"cluster_{p}") as cluster:
            cluster.attr(label=f"V{p + 1} ({g.parts[p]})", style="rounded")
            for v in g.part_members(p):
                label = f"{p},{v[1]}"
                if c is not None:
                    label += f"\\n{vertex_spectrum(g, c, v)!r}"
                cluster.node(node_id(v), label, fillcolor=fill)

    dot.attr("node", shape="point")
    for leaf in g.leaves:
        dot.node(node_id(leaf), "")

    for a, b in g.edges:
        color = c.color(a, b) if c is not None else None
        if color is None:
            dot.edge(node_id(a), node_id(b))
        else:
            dot.edge(node_id(a), node_id(b), label=str(color), fontsize="9")
    return dot


def to_dot(g: PartitionedGraph, c: Optional[EdgeColoring] = None) -> str:
    return to_graphviz(g, c).source


def write_dot(g: PartitionedGraph, c: Optional[EdgeColoring], path: Union[str, Path]) -> Path:
    """Save DOT source to `path` (no rendering; that needs the graphviz binaries)."""
    path = Path(path)
    to_graphviz(g, c).save(filename=path.name, directory=str(path.parent))
    logger.info(f"Wrote DOT for {g.describe()} to {path}")
    return path
