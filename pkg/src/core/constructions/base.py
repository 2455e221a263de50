"""
Base Construction definition.
A Construction recognizes the part sizes of a family it can color and builds
the coloring. The CLI and the bounds module reach every family through it.
"""
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Sequence, Tuple

from src.core.exceptions import PreconditionError
from src.core.graph import ColoredGraph, EdgeColoring, build_multipartite

Params = Dict[str, Any]


@dataclass
class ConstructionSchema:
    name: str
    reference: str
    description: str
    hypothesis: str


class Construction(ABC):
    name: str
    reference: str
    description: str
    hypothesis: str

    @abstractmethod
    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        """Parameters when the size multiset has the family's shape (parities unchecked)."""
        pass

    @abstractmethod
    def layout(self, params: Params) -> Tuple[int, ...]:
        """Part sizes of the constructed graph, in construction order."""
        pass

    @abstractmethod
    def build(self, params: Params, **options: Any) -> EdgeColoring:
        """Build the coloring."""
        pass

    def feasible(self, params: Params) -> bool:
        """Whether the construction's parity hypotheses hold."""
        return True

    def expected_deficiency(self, params: Params) -> int:
        """Deficiency of the built coloring in closed form."""
        return 0

    def applies(self, sizes: Sequence[int]) -> Optional[Params]:
        params = self.match(sizes)
        if params is None or not self.feasible(params):
            return None
        return params

    def run(self, sizes: Sequence[int], **options: Any) -> ColoredGraph:
        params = self.match(sizes)
        if params is None:
            raise PreconditionError(
                self.hypothesis,
                f"Sizes {tuple(sizes)} do not fit {self.reference}: expected {self.hypothesis}"
            )
        coloring = self.build(params, **options)
        return ColoredGraph(build_multipartite(self.layout(params)), coloring, label=self.name)

    def to_schema(self) -> ConstructionSchema:
        return ConstructionSchema(self.name, self.reference, self.description, self.hypothesis)


def one_apart(sizes: Sequence[int]) -> Iterator[Tuple[int, int, int]]:
    """
    Yield (special, n, r) for every way of reading `sizes` as r equal parts of
    size n plus one special part. Larger special values first.
    """
    counts = Counter(sizes)
    for special in sorted(counts, reverse=True):
        rest = counts.copy()
        rest[special] -= 1
        remaining = [value for value, count in rest.items() if count > 0]
        if len(remaining) == 1:
            n = remaining[0]
            yield special, n, rest[n]
