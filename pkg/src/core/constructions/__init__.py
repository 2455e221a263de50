"""
Constructive colorings of complete multipartite families.
"""
from src.core.constructions.bipartite import block_bipartite_coloring
from src.core.constructions.completion import (
    Infeasible,
    SpectrumAssignment,
    forced_spectrum_completion,
    prescribed_lse_knn,
)
from src.core.constructions.four_part import klmn_alpha, thm8_coloring
from src.core.constructions.joins import thm3_coloring, thm4_coloring, thm4_feasible
from src.core.constructions.shifted_sum import (
    ShiftedSumLayout,
    canonical_order,
    shifted_sum_coloring,
)
from src.core.constructions.staggered import (
    StaggeredLayout,
    staggered_spectra_case1,
    staggered_spectra_case2,
    thm5_coloring,
    thm6_coloring,
    thm7_coloring,
)
from src.core.constructions.uniform import balanced_uniform_coloring

__all__ = [
    "Infeasible",
    "ShiftedSumLayout",
    "SpectrumAssignment",
    "StaggeredLayout",
    "balanced_uniform_coloring",
    "block_bipartite_coloring",
    "canonical_order",
    "forced_spectrum_completion",
    "klmn_alpha",
    "prescribed_lse_knn",
    "shifted_sum_coloring",
    "staggered_spectra_case1",
    "staggered_spectra_case2",
    "thm3_coloring",
    "thm4_coloring",
    "thm4_feasible",
    "thm5_coloring",
    "thm6_coloring",
    "thm7_coloring",
    "thm8_coloring",
]
