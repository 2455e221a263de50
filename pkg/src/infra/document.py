"""
Coloring documents: schema, canonical rendering and verification.

A document is JSON with a versioned schema string. Rendering is canonical
(fixed key order, edges sorted, one edge per line, trailing newline), so
equal colorings always produce byte-identical files.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from src.core.exceptions import DocumentError, ErrorCode, NotFoundError, ValidationError
from src.core.graph import (
    Edge,
    EdgeColoring,
    Node,
    PartitionedGraph,
    PendantLeaf,
    coloring_deficiency,
    edge_key,
    find_conflict,
    is_interval_t_coloring,
    make_edge,
    part_deficiencies,
    vertex_deficiencies,
    vertex_spectrum,
)

logger = logging.getLogger(__name__)

SCHEMA = "icdef-coloring/1"


# ============================================
# Models
# ============================================

class EdgeRecord(BaseModel):
    """One colored edge; u and v are [part, index] or [part, index, ordinal] for a leaf."""
    u: List[int] = Field(min_length=2, max_length=3)
    v: List[int] = Field(min_length=2, max_length=3)
    c: int

    model_config = {"extra": "forbid"}


class ColoringDocument(BaseModel):
    """Serialized coloring of a complete multipartite graph."""
    schema_id: Literal["icdef-coloring/1"] = Field(alias="schema")
    parts: List[int] = Field(min_length=2)
    pendants: List[List[int]] = Field(default_factory=list)
    t: int = Field(ge=0)
    edges: List[EdgeRecord]

    model_config = {"extra": "forbid", "populate_by_name": True}


# ============================================
# Conversion
# ============================================

def _coords(node: Node) -> List[int]:
    if isinstance(node, PendantLeaf):
        return [node.anchor[0], node.anchor[1], node.ordinal]
    return [node[0], node[1]]


def _node(coords: List[int]) -> Node:
    if len(coords) == 3:
        return PendantLeaf((coords[0], coords[1]), coords[2])
    return (coords[0], coords[1])


def document_from_coloring(g: PartitionedGraph, c: EdgeColoring) -> ColoringDocument:
    pendants = [
        [anchor[0], anchor[1]] for anchor, count in g.pendants for _ in range(count)
    ]
    edges = [
        EdgeRecord(u=_coords(a), v=_coords(b), c=color) for (a, b), color in c.items()
    ]
    return ColoringDocument(schema=SCHEMA, parts=list(g.parts), pendants=pendants, t=c.t, edges=edges)


def render_document(doc: ColoringDocument) -> str:
    """Canonical text form; edges sorted by endpoint coordinates."""
    records = sorted(
        doc.edges,
        key=lambda rec: edge_key(make_edge(_node(rec.u), _node(rec.v)))
    )
    lines = [
        "{",
        f'  "schema": {json.dumps(doc.schema_id)},',
        f'  "parts": {json.dumps(doc.parts)},',
    ]
    if doc.pendants:
        lines.append(f'  "pendants": {json.dumps(doc.pendants)},')
    lines.append(f'  "t": {doc.t},')
    lines.append('  "edges": [')
    for k, rec in enumerate(records):
        a, b = make_edge(_node(rec.u), _node(rec.v))
        comma = "," if k < len(records) - 1 else ""
        lines.append(
            f'    {{"u": {json.dumps(_coords(a))}, "v": {json.dumps(_coords(b))}, "c": {rec.c}}}{comma}'
        )
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> ColoringDocument:
    try:
        return ColoringDocument.model_validate_json(text)
    except PydanticValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        raise DocumentError(
            f"Malformed coloring document at '{where}': {first.get('msg')}",
            code=ErrorCode.DOCUMENT_SCHEMA,
            details={"errors": e.error_count()}
        )


def document_graph(doc: ColoringDocument) -> PartitionedGraph:
    counts: Dict[Tuple[int, int], int] = {}
    for anchor in doc.pendants:
        if len(anchor) != 2:
            raise DocumentError(f"Pendant anchor {anchor} must be [part, index]")
        key = (anchor[0], anchor[1])
        counts[key] = counts.get(key, 0) + 1
    try:
        return PartitionedGraph(tuple(doc.parts), tuple(counts.items()))
    except (ValidationError, NotFoundError) as e:
        raise DocumentError(f"Invalid graph in document: {e.message}")


def document_edges(doc: ColoringDocument, g: PartitionedGraph) -> List[Tuple[Edge, int]]:
    """
    Edge/color pairs of the document after structural checks.

    Raises:
        DocumentError: unknown vertex, non-edge, duplicate or missing edge.
    """
    seen: Dict[Edge, int] = {}
    for rec in doc.edges:
        a, b = _node(rec.u), _node(rec.v)
        for node, raw in ((a, rec.u), (b, rec.v)):
            if not g.has_vertex(node):
                raise DocumentError(f"Vertex {raw} is not in the graph")
        if not g.adjacent(a, b):
            raise DocumentError(f"{rec.u} and {rec.v} are not adjacent")
        edge = make_edge(a, b)
        if edge in seen:
            raise DocumentError(f"Edge {rec.u}-{rec.v} listed twice")
        seen[edge] = rec.c
    for edge in g.edges:
        if edge not in seen:
            raise DocumentError(f"Edge {_coords(edge[0])}-{_coords(edge[1])} has no color")
    return list(seen.items())


# ============================================
# Verification
# ============================================

@dataclass
class VerificationReport:
    """Result of checking a document; `failure` names the first failed check."""
    graph: PartitionedGraph
    t: int
    failure: Optional[str] = None
    deficiency: Optional[int] = None
    interval: bool = False
    per_part: Tuple[int, ...] = ()
    per_vertex: Dict[Node, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure is None

    @property
    def summary(self) -> str:
        if self.failure:
            return f"FAILED: {self.failure}"
        if self.interval:
            return f"interval {self.t}-coloring"
        return f"proper {self.t}-coloring, deficiency {self.deficiency}"


def verify_document(doc: ColoringDocument, require_interval: bool = False) -> VerificationReport:
    """
    Check that the document is a proper coloring using exactly the colors 1..t.

    Structural problems raise DocumentError; failed checks are reported.
    """
    g = document_graph(doc)
    items = document_edges(doc, g)
    report = VerificationReport(graph=g, t=doc.t)

    for (a, b), color in items:
        if not 1 <= color <= doc.t:
            report.failure = f"edge {_coords(a)}-{_coords(b)} has color {color} outside [1, {doc.t}]"
            return report

    c = EdgeColoring(dict(items), doc.t)
    conflict = find_conflict(g, c)
    if conflict is not None:
        first, second, color = conflict
        report.failure = (
            f"edges {_coords(first[0])}-{_coords(first[1])} and "
            f"{_coords(second[0])}-{_coords(second[1])} share color {color}"
        )
        return report

    unused = sorted(set(range(1, doc.t + 1)) - c.used_colors)
    if unused:
        report.failure = f"color {unused[0]} is never used"
        return report

    report.per_vertex = vertex_deficiencies(g, c)
    report.per_part = part_deficiencies(g, c)
    report.deficiency = coloring_deficiency(g, c)
    report.interval = is_interval_t_coloring(g, c)
    if require_interval and not report.interval:
        gapped = next(v for v, value in report.per_vertex.items() if value > 0)
        report.failure = f"spectrum of {_coords(gapped)} is {vertex_spectrum(g, c, gapped)!r}, not an interval"
    logger.info(f"Verified {g.describe()}: {report.summary}")
    return report
