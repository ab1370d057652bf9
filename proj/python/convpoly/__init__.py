"""Exact convolution polynomials and their matrices."""

from ._convpoly import (
    SaddleError,
    catalog_names,
    compare,
    compose_triangles,
    family,
    family_value,
    iterate,
    p_triangle,
    ratio_series,
    revert,
    saddle_point,
    series,
    stirling_polynomial,
    triangle,
)

__all__ = [
    "SaddleError",
    "catalog_names",
    "compare",
    "compose_triangles",
    "family",
    "family_value",
    "iterate",
    "p_triangle",
    "ratio_series",
    "revert",
    "saddle_point",
    "series",
    "stirling_polynomial",
    "triangle",
]
