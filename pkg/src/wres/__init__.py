"""Exact noncommutative-residue computations for perturbed Dirac operators."""

__version__ = "0.1.0"

from .boundary import enumerate_cases, evaluate_case, evaluate_pairing, total_boundary_term
from .clifford import CliffordElement, GammaBasis, build_gamma
from .interior import trace_E, trace_identity_suite, wres_integrand
from .poly import Poly, PolyRing, poly_ring
from .ratfun import SymbolFunction
from .scalars import GaussianRational
from .sphere import SphereValue, sphere_integrate
from .symbols import BoundaryModel, boundary_model

__all__ = [
    "__version__", "GaussianRational", "Poly", "PolyRing", "poly_ring", "GammaBasis",
    "CliffordElement", "build_gamma", "SymbolFunction", "BoundaryModel", "boundary_model",
    "SphereValue", "sphere_integrate", "enumerate_cases", "evaluate_case", "evaluate_pairing",
    "total_boundary_term", "trace_E", "wres_integrand", "trace_identity_suite",
]
