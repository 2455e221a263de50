"""
Construction Registry.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.constructions.base import Construction, ConstructionSchema, Params
from src.core.constructions.definitions import (
    BalancedUniform,
    BlockBipartite,
    FourPart,
    JoinTrn,
    JoinTrPlusOne,
    ShiftedSum,
    StaggeredOne,
    StaggeredPair,
    StaggeredTwo,
)
from src.core.exceptions import PreconditionError, UnknownMethodError

logger = logging.getLogger(__name__)

# first applicable wins for `auto`
AUTO_ORDER = ("thm3", "thm4", "thm5", "thm6", "thm7", "thm8", "thm2")
# interval families for two parts, outside the auto order
BIPARTITE_METHODS = ("lemma2", "lemma3")


class ConstructionRegistry:
    def __init__(self):
        self._constructions: Dict[str, Construction] = {}
        self._register_defaults()

    def _register_defaults(self):
        self.register(ShiftedSum())
        self.register(JoinTrn())
        self.register(JoinTrPlusOne())
        self.register(StaggeredOne())
        self.register(StaggeredTwo())
        self.register(StaggeredPair())
        self.register(FourPart())
        self.register(BlockBipartite())
        self.register(BalancedUniform())

    def register(self, construction: Construction):
        self._constructions[construction.name] = construction

    def get(self, name: str) -> Construction:
        if name not in self._constructions:
            raise UnknownMethodError(name)
        return self._constructions[name]

    def names(self) -> List[str]:
        return list(self._constructions)

    def get_schemas(self) -> List[ConstructionSchema]:
        return [c.to_schema() for c in self._constructions.values()]

    def resolve_auto(self, sizes: Sequence[int]) -> Tuple[Construction, Params]:
        """First construction in AUTO_ORDER whose shape and hypotheses fit `sizes`."""
        for name in AUTO_ORDER:
            construction = self._constructions[name]
            params = construction.applies(sizes)
            if params is not None:
                logger.info(f"auto picked {name} ({construction.reference}) for {tuple(sizes)}")
                return construction, params
        if len(sizes) == 2:
            fits = [name for name in BIPARTITE_METHODS if self._constructions[name].applies(sizes) is not None]
            if fits:
                hint = f"use --method {' or '.join(fits)}"
            else:
                hint = "lemma2 covers K_{n,nm} and lemma3 covers K_{n,n}, neither fits"
            raise PreconditionError(
                "a recognized family or at least 3 parts",
                f"No auto construction for the bipartite sizes {tuple(sizes)}; {hint}"
            )
        raise PreconditionError(
            "a recognized family or at least 3 parts",
            f"No construction applies to sizes {tuple(sizes)}"
        )

    def find(self, sizes: Sequence[int], name: str) -> Optional[Params]:
        """Parameters of `name` for `sizes` when its shape and hypotheses hold."""
        return self.get(name).applies(sizes)


registry = ConstructionRegistry()
