"""Exact abelian Reshetikhin-Turaev, Turaev-Viro and BF invariants of 3-manifolds."""

from .exact_arith import RationalAngle, angle_from, bilinear_character_sum
from .intlinalg import (
    BlowUp,
    HandleSlide,
    HomologySummary,
    IntegerMatrix,
    homology_from_linking_matrix,
    kernel_count_mod_k,
    linking_form,
    smith_normal_form,
)
from .invariants import (
    ExternalLink,
    SurgeryPresentation,
    bf_partition,
    rt_center_closed,
    upsilon,
    upsilon_link,
    verify_identities,
)
from .statesum import CellComplex, tv_bruteforce, tv_cocycle_count

__version__ = "0.1.0"

__all__ = [
    "BlowUp",
    "CellComplex",
    "ExternalLink",
    "HandleSlide",
    "HomologySummary",
    "IntegerMatrix",
    "RationalAngle",
    "SurgeryPresentation",
    "angle_from",
    "bf_partition",
    "bilinear_character_sum",
    "homology_from_linking_matrix",
    "kernel_count_mod_k",
    "linking_form",
    "rt_center_closed",
    "smith_normal_form",
    "tv_bruteforce",
    "tv_cocycle_count",
    "upsilon",
    "upsilon_link",
    "verify_identities",
]
