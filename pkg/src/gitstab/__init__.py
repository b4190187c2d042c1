"""Torus-level stability analysis of monomial supports of homogeneous forms."""
from .core import NormalizationCone, enumerate_monomials, mu_support, stabilizer_lattice
from .families import classify_support, maximal_nonstable_families
from .luna import context_for_support, luna_classify
from .strata import build_stratification, canonicalize

__all__ = [
    "NormalizationCone",
    "enumerate_monomials",
    "mu_support",
    "stabilizer_lattice",
    "classify_support",
    "maximal_nonstable_families",
    "context_for_support",
    "luna_classify",
    "build_stratification",
    "canonicalize",
]
