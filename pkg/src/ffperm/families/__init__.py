"""Permutation families built on the trace map, with closed-form inverses."""

from .build import (FamilyInstance, SweepRow, build, check_instance, find_delta, sweep,
                    trace_table)
from .inverses import (agw_inverse, closed_inverse, cube_reduced_g, example_display_inverse,
                       lemma5_g, psi_table, reduced_g, square_reduced_g, t1_t2_inverse, t3_t6_inverse,
                       t7_t9_inverse, t10_t13_inverse)
from .params import (CubeParams, HypothesisReport, Term, check_hypotheses, cube_case,
                     cube_params, effective, f_map, h_map, is_noncube, terms)
from .spec import F1_NAMES, FAMILIES, F1Choice, FamilySpec, f1_choice

__all__ = [
    "F1_NAMES", "FAMILIES", "CubeParams", "F1Choice", "FamilyInstance", "FamilySpec",
    "HypothesisReport", "SweepRow", "Term", "agw_inverse", "build", "check_hypotheses", "check_instance",
    "closed_inverse", "cube_case", "cube_params", "cube_reduced_g", "effective",
    "example_display_inverse", "f1_choice", "f_map", "find_delta", "h_map", "is_noncube",
    "lemma5_g", "psi_table", "reduced_g", "square_reduced_g", "sweep", "t1_t2_inverse",
    "t3_t6_inverse", "t7_t9_inverse", "t10_t13_inverse", "terms", "trace_table",
]
