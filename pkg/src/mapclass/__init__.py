"""Exact computations in the mapping class group of a genus g surface with
one boundary component, through its faithful action on the free group pi_1."""

from .words import Word, Automorphism, RankError, WordTooLong, cyclic_key, inner_witness
from .surface import SurfaceModel, build_surface, curve_equal
from .engine import (
    ExpressionError,
    MappingClass,
    conjugate_twist,
    mcg_equal,
    mcg_equal_mod_boundary,
    order_mod_boundary,
    parse_expression,
    reflection,
    resolve_name,
    twist_about,
)
from .homology import SympMatrix, abelianize, matrix_order
from .presentations import export, rewrite_two_generator, verify_presentation, wajnryb_presentation
from .harness import CheckResult, run_all, run_check

__version__ = "0.1.0"
