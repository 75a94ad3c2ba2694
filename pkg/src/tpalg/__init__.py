"""Exact computations with transposed Poisson (super)algebras.

Algebras are given by structure constants over Q or GF(p); see
:mod:`tpalg.catalog` for ready-made examples and :mod:`tpalg.cli` for the
command-line interface.
"""

from .algebra import Product, SuperAlgebra, direct_sum, load, save, validate
from .exactmath import QQ, FieldSpec, Matrix, Subspace

__all__ = [
    "FieldSpec",
    "Matrix",
    "Product",
    "QQ",
    "Subspace",
    "SuperAlgebra",
    "direct_sum",
    "load",
    "save",
    "validate",
]

__version__ = "0.1.0"
