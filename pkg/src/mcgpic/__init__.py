"""Abelianizations of symmetric mapping class groups and the Picard groups they compute."""

from .coverings import CoverAnalysis, CyclicCoverSpec, analyze, is_numerically_admissible, smcg_abelianization
from .linalg import FgAbelianGroup, IntMatrix, SnfResult, cokernel, reduce_mod, smith_normal_form, theta_wedge_matrix
from .presentations import (
    FinitePresentation,
    Word,
    abelianization,
    artin_braid_presentation,
    birman_hilden_presentation,
    braid_center_word,
    exponent_sum_vector,
    quotient_by_words,
    relation_matrix,
)
from .report import PicardReport

__version__ = "0.1.0"
