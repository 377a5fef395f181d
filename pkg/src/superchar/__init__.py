"""Duflo-Serganova homomorphisms on supercharacter rings as Laurent substitution."""

from .dshom import DsMap, build_ds, ds_apply, ds_compose_check, iterate_ds
from .generators import (
    TwistedElement,
    exc_image_elements,
    exc_image_membership,
    gens_hk,
    gl_twisted_image,
    verify_generator_transfer,
)
from .kackernel import KernelDecomposition, kac_k, kac_k_alternating, kernel_decompose, kernel_member, sch_kac
from .polyio import format_poly, parse_poly, parse_poly_for, poly_from_json, poly_to_json
from .rootdata import AlgebraDatum, build_algebra, iso_set_validate, parse_algebra, parse_root, parse_weight
from .superring import is_in_JG, is_supersymmetric, is_w_invariant, membership
from .weightlat import LaurentPoly, MonomialOrder, SubstitutionRule, Weight
from .weylchar import char_decompose, char_irrep

__version__ = "0.1.0"

__all__ = [
    "AlgebraDatum", "DsMap", "KernelDecomposition", "LaurentPoly", "MonomialOrder",
    "SubstitutionRule", "TwistedElement", "Weight", "build_algebra", "build_ds",
    "char_decompose", "char_irrep", "ds_apply", "ds_compose_check", "exc_image_elements",
    "exc_image_membership", "format_poly", "gens_hk", "gl_twisted_image", "is_in_JG",
    "is_supersymmetric", "is_w_invariant", "iso_set_validate", "iterate_ds", "kac_k",
    "kac_k_alternating", "kernel_decompose", "kernel_member", "membership", "parse_algebra",
    "parse_poly", "parse_poly_for", "parse_root", "parse_weight", "poly_from_json",
    "poly_to_json", "sch_kac", "verify_generator_transfer",
]
