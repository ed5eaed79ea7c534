"""Exact Ollivier curvature, reflections and Bonnet-Myers sharpness of graphs."""

import json
from fractions import Fraction

from ._core import (
    Graph,
    InputError,
    InternalError,
    bakry_emery_curvature,
    cartesian_product,
    factorize,
    family,
    identify_family,
    is_prime,
    is_reflective,
    parse_edge_list,
    run_command,
    smallest_positive_laplacian_eigenvalue,
)
from . import _core


def edge_curvature(g, x, y):
    return Fraction(_core._edge_curvature(g, x, y))


def oracle_curvature(g, x, y, max_support=10):
    return Fraction(_core._oracle_curvature(g, x, y, max_support))


def edge_curvatures(g):
    """Curvature of every edge, in the order of g.edges()."""
    return [Fraction(v) for v in _core._edge_curvatures(g)]


def effective_diameter(g):
    return Fraction(_core._effective_diameter(g))


def classify(g, tol=1e-8):
    """The classification report as a dict; rationals become Fractions."""
    report = json.loads(_core._classify_json(g, tol))
    for key in ("kappa_min", "diam_eff"):
        report[key] = Fraction(int(report[key]["num"]), int(report[key]["den"]))
    return report


__all__ = [
    "Graph",
    "InputError",
    "InternalError",
    "bakry_emery_curvature",
    "cartesian_product",
    "classify",
    "edge_curvature",
    "edge_curvatures",
    "effective_diameter",
    "factorize",
    "family",
    "identify_family",
    "is_prime",
    "is_reflective",
    "oracle_curvature",
    "parse_edge_list",
    "run_command",
    "smallest_positive_laplacian_eigenvalue",
]
