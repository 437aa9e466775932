"""Exact computations in the block Lie algebras B(Gamma, J, delta)."""

from .algebra import Element, bracket, derived_membership
from .exactfield import FieldElement, parse_scalar, scalar
from .lattice import AlgebraSpec, GammaSpec, load_spec, validate_spec
from .notation import format_element, parse_element

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "Element",
    "FieldElement",
    "GammaSpec",
    "bracket",
    "derived_membership",
    "format_element",
    "load_spec",
    "parse_element",
    "parse_scalar",
    "scalar",
    "validate_spec",
]
