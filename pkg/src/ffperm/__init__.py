"""Permutation polynomials from trace functions and their compositional inverses."""

from .kernels import BACKEND
from .gf_core import FElem, FieldCtx, make_field

__version__ = "0.1.0"

__all__ = ["BACKEND", "FElem", "FieldCtx", "make_field", "__version__"]
