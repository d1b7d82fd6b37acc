"""Poncelet polygon families and the loci of their centers of mass."""

from ._core import (
    CircleFit,
    Conic,
    EllipseParams,
    FreeParameter,
    InnerTemplate,
    PonceletError,
    PonceletFamily,
    center_of_mass,
    certify_family,
    dual_conic,
    find_periodic_family,
    fit_circle,
    matrix_distance,
    rotation_number,
    sample_locus,
    verify_dual,
    verify_main,
    verify_measure,
    verify_porism,
    verify_weill,
)

__all__ = [
    "CircleFit",
    "Conic",
    "EllipseParams",
    "FreeParameter",
    "InnerTemplate",
    "PonceletError",
    "PonceletFamily",
    "center_of_mass",
    "certify_family",
    "dual_conic",
    "find_periodic_family",
    "fit_circle",
    "matrix_distance",
    "rotation_number",
    "sample_locus",
    "verify_dual",
    "verify_main",
    "verify_measure",
    "verify_porism",
    "verify_weill",
]
