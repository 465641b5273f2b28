"""Exact analysis of right zero divisors in finite-dimensional algebras."""

from .algebra import (
    Algebra,
    change_basis,
    check_axioms,
    determinant_form,
    direct_sum,
    is_right_zero_divisor,
    make_algebra,
    opposite,
    product,
    right_mult_matrix,
)
from .algfile import format_algebra, load_algebra, parse_algebra_file
from .catalog import catalog, lookup
from .factor import analyze_residual, linear_factors, quadratic_split
from .field import QQ, FieldElement, FieldTower, make_tower
from .ideals import maximal_left_ideals
from .linalg import Matrix, Subspace
from .poly import LinearForm, MultiPoly
from .roots import univariate_roots
from .tameness import cross_check_sample, open_question_row, tameness_report, zero_divisor_set

__all__ = [
    "Algebra", "FieldElement", "FieldTower", "LinearForm", "Matrix", "MultiPoly", "QQ", "Subspace",
    "analyze_residual", "catalog", "change_basis", "check_axioms", "cross_check_sample",
    "determinant_form", "direct_sum", "format_algebra", "is_right_zero_divisor", "linear_factors",
    "load_algebra", "lookup", "make_algebra", "make_tower", "maximal_left_ideals",
    "open_question_row", "opposite", "parse_algebra_file", "product", "quadratic_split",
    "right_mult_matrix", "tameness_report", "univariate_roots", "zero_divisor_set",
]
