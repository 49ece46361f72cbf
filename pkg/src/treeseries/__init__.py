"""Exact computer algebra for series expanded over trees, monoids and operads."""

from .coeff import ParseError, Poly, format_value, parse_value
from .operads import AS, DIAS, DUP, SetOperad, get_instance
from .series import (
    Carrier,
    GradedSeries,
    SemidirectElement,
    act,
    alpha_from,
    alpha_membership,
    comp_inverse,
    compose,
    embed_lambda_rho,
    extract_lambda_rho,
    factor_under_rho,
    format_series,
    inv_monoid,
    mul_monoid,
    parse_series,
    project_order,
    section_comb,
    semidirect_inverse,
    semidirect_mul,
    series_from_json,
    series_to_json,
)
from .trees import LEAF, VERTEX, Tree, enumerate_trees, over, parse_tree, under

__all__ = [
    "ParseError", "Poly", "format_value", "parse_value",
    "AS", "DIAS", "DUP", "SetOperad", "get_instance",
    "Carrier", "GradedSeries", "SemidirectElement", "act", "alpha_from", "alpha_membership",
    "comp_inverse", "compose", "embed_lambda_rho", "extract_lambda_rho", "factor_under_rho",
    "format_series", "inv_monoid", "mul_monoid", "parse_series", "project_order",
    "section_comb", "semidirect_inverse", "semidirect_mul", "series_from_json", "series_to_json",
    "LEAF", "VERTEX", "Tree", "enumerate_trees", "over", "parse_tree", "under",
]
