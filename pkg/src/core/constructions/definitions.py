"""
Concrete Construction implementations.
Wraps the family colorings into recognizable, buildable methods.
"""
from typing import Any, Optional, Sequence, Tuple

from src.core.constructions.base import Construction, Params, one_apart
from src.core.constructions.bipartite import block_bipartite_coloring
from src.core.constructions.four_part import thm8_coloring
from src.core.constructions.joins import thm3_coloring, thm4_coloring, thm4_feasible
from src.core.constructions.shifted_sum import (
    ShiftedSumLayout,
    canonical_order,
    shifted_sum_coloring,
)
from src.core.constructions.staggered import (
    thm5_coloring,
    thm5_w_deficiency,
    thm6_coloring,
    thm6_w_deficiencies,
    thm7_coloring,
    thm7_w_deficiencies,
)
from src.core.constructions.uniform import balanced_uniform_coloring
from src.core.graph import EdgeColoring


class ShiftedSum(Construction):
    name = "thm2"
    reference = "Theorem 3.1"
    description = "Shifted-sum coloring of any complete multipartite graph with at least 3 parts."
    hypothesis = "at least 3 parts"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        if len(sizes) < 3:
            return None
        return {"sizes": canonical_order(sizes)}

    def layout(self, params: Params) -> Tuple[int, ...]:
        return tuple(params["sizes"])

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return shifted_sum_coloring(ShiftedSumLayout(tuple(params["sizes"])))

    def expected_deficiency(self, params: Params) -> int:
        return ShiftedSumLayout(tuple(params["sizes"])).expected_deficiency()


class BlockBipartite(Construction):
    name = "lemma2"
    reference = "Lemma 2.2"
    description = "Block coloring of K_{n,nm}."
    hypothesis = "two parts n and nm"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        if len(sizes) != 2:
            return None
        small, big = sorted(sizes)
        if big % small:
            return None
        return {"n": small, "m": big // small}

    def layout(self, params: Params) -> Tuple[int, ...]:
        return (params["n"], params["n"] * params["m"])

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return block_bipartite_coloring(params["n"], params["m"])


class BalancedUniform(Construction):
    name = "lemma3"
    reference = "Lemma 2.3"
    description = "Interval coloring of K_{n,...,n} with every spectrum [1,(r-1)n]."
    hypothesis = "r >= 2 equal parts"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        if len(sizes) < 2 or len(set(sizes)) != 1:
            return None
        return {"n": sizes[0], "r": len(sizes)}

    def feasible(self, params: Params) -> bool:
        return (params["n"] * params["r"]) % 2 == 0

    def layout(self, params: Params) -> Tuple[int, ...]:
        return (params["n"],) * params["r"]

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return balanced_uniform_coloring(params["n"], params["r"], method=options.get("balanced", "auto"))


class JoinTrn(Construction):
    name = "thm3"
    reference = "Theorem 3.3"
    description = "Interval coloring of K_{n,...,n,trn}."
    hypothesis = "r parts of size n plus one part of size trn"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        for special, n, r in one_apart(sizes):
            if special % (r * n) == 0:
                return {"n": n, "r": r, "t": special // (r * n)}
        return None

    def feasible(self, params: Params) -> bool:
        return (params["n"] * params["r"]) % 2 == 0

    def layout(self, params: Params) -> Tuple[int, ...]:
        n, r, t = params["n"], params["r"], params["t"]
        return (n,) * r + (t * r * n,)

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm3_coloring(params["n"], params["r"], params["t"])


class JoinTrPlusOne(Construction):
    name = "thm4"
    reference = "Theorem 3.4"
    description = "Interval coloring of K_{n,...,n,(tr+1)n}."
    hypothesis = "r parts of size n plus one part of size (tr+1)n"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        for special, n, r in one_apart(sizes):
            if special % n == 0 and special > n and (special // n - 1) % r == 0:
                return {"n": n, "r": r, "t": (special // n - 1) // r}
        return None

    def feasible(self, params: Params) -> bool:
        return thm4_feasible(params["n"], params["r"])

    def layout(self, params: Params) -> Tuple[int, ...]:
        n, r, t = params["n"], params["r"], params["t"]
        return (n,) * r + ((t * r + 1) * n,)

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm4_coloring(params["n"], params["r"], params["t"])


class _NearBalanced(Construction):
    surplus: int

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        for special, n, r in one_apart(sizes):
            if special == n + self.surplus:
                return {"n": n, "r": r}
        return None

    def feasible(self, params: Params) -> bool:
        return (params["n"] * (params["r"] + 1)) % 2 == 0

    def layout(self, params: Params) -> Tuple[int, ...]:
        return (params["n"],) * params["r"] + (params["n"] + self.surplus,)


class StaggeredOne(_NearBalanced):
    name = "thm5"
    reference = "Theorem 3.5"
    description = "Coloring of K_{n,...,n,n+1} with a single deficient vertex."
    hypothesis = "r parts of size n plus one part of size n+1"
    surplus = 1

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm5_coloring(params["n"], params["r"], case=options.get("case"))

    def expected_deficiency(self, params: Params) -> int:
        return thm5_w_deficiency(params["n"], params["r"])


class StaggeredTwo(_NearBalanced):
    name = "thm6"
    reference = "Theorem 3.6"
    description = "Coloring of K_{n,...,n,n+2} with two deficient vertices."
    hypothesis = "r parts of size n plus one part of size n+2"
    surplus = 2

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm6_coloring(params["n"], params["r"], case=options.get("case"))

    def expected_deficiency(self, params: Params) -> int:
        return sum(thm6_w_deficiencies(params["n"], params["r"]))


class StaggeredPair(Construction):
    name = "thm7"
    reference = "Theorem 3.7"
    description = "Coloring of K_{n,...,n,n+1,n+1} with r-1 parts of size n, r odd."
    hypothesis = "r-1 >= 2 parts of size n plus two parts of size n+1"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        ordered = sorted(sizes)
        if len(ordered) < 4:
            return None
        n = ordered[0]
        if ordered[-1] == ordered[-2] == n + 1 and all(s == n for s in ordered[:-2]):
            return {"n": n, "r": len(ordered) - 1}
        return None

    def feasible(self, params: Params) -> bool:
        return params["r"] % 2 == 1

    def layout(self, params: Params) -> Tuple[int, ...]:
        n, r = params["n"], params["r"]
        return (n,) * (r - 1) + (n + 1, n + 1)

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm7_coloring(params["n"], params["r"])

    def expected_deficiency(self, params: Params) -> int:
        return sum(thm7_w_deficiencies(params["n"], params["r"]))


class FourPart(Construction):
    name = "thm8"
    reference = "Theorem 3.8"
    description = "Coloring of K_{l,m,n,l+m+n} with deficiency l^2."
    hypothesis = "four parts l, m, n, l+m+n"

    def match(self, sizes: Sequence[int]) -> Optional[Params]:
        if len(sizes) != 4:
            return None
        for k in sorted(range(4), key=lambda idx: -sizes[idx]):
            rest = sorted(sizes[idx] for idx in range(4) if idx != k)
            if sizes[k] == sum(rest):
                return {"l": rest[0], "m": rest[1], "n": rest[2]}
        return None

    def layout(self, params: Params) -> Tuple[int, ...]:
        l, m, n = params["l"], params["m"], params["n"]  # noqa: E741
        return (l, m, n, l + m + n)

    def build(self, params: Params, **options: Any) -> EdgeColoring:
        return thm8_coloring(params["l"], params["m"], params["n"])

    def expected_deficiency(self, params: Params) -> int:
        return params["l"] ** 2
