"""Exact solver for arithmetic progressions on a*x^2 + b*y^2 + c*z^2 = d*x*y*z."""

from .normeq import candidate_set, candidate_sets, norm_eq_solutions
from .oracle import HeightBound, brute_force_ap
from .qfield import QQ, AlgInt, AlgNum, Field, mk_field, parse_element, render, unit_group
from .solver import APTriple, MRInstance, has_nontrivial, solve_ap
from .uniteq import exponent_bound, unit_eq

__all__ = [
    "QQ", "AlgInt", "AlgNum", "Field", "mk_field", "parse_element", "render", "unit_group",
    "candidate_set", "candidate_sets", "norm_eq_solutions", "exponent_bound", "unit_eq",
    "APTriple", "MRInstance", "has_nontrivial", "solve_ap", "HeightBound", "brute_force_ap",
]
__version__ = "0.1.0"
