"""Exact computations with pivotal Hopf G-coalgebras, their integrals and modified traces"""

from .errors import HopfGError
from .hopf_core import HopfGFamily, check_all_axioms
from .integrals import GIntegral, integral_suite, right_integral, symmetrise
from .mtrace import ProjPresentation, check_reduction_lemma, hs_trace
from .scalar import CycNumber

__version__ = "0.1.0"

__all__ = [
    "CycNumber",
    "GIntegral",
    "HopfGError",
    "HopfGFamily",
    "ProjPresentation",
    "check_all_axioms",
    "check_reduction_lemma",
    "hs_trace",
    "integral_suite",
    "right_integral",
    "symmetrise",
]
