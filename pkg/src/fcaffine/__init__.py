"""
Exact enumeration of fully commutative elements in the affine Coxeter groups
of types A, B, C, D, their eventually periodic growth functions, and the
closed forms describing the periodic tails.
"""

from .coxeter import AffineType, fc_census, graph
from .formulas import closed_tail, minimal_period, tail_pattern
from .qseries import Poly, QuasiRational, expand, gauss_binomial, tail_min_period

__all__ = [
    "AffineType", "fc_census", "graph", "closed_tail", "minimal_period",
    "tail_pattern", "Poly", "QuasiRational", "expand", "gauss_binomial",
    "tail_min_period",
]
__version__ = "0.1.0"
