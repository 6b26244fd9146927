"""Exact Casimir eigenvalues, critical representations and stability certificates
for the Cayley plane and the quaternionic Grassmannians."""

from .ratlin import RatMatrix, Rational
from .rootsys import DominantWeight, InvalidAlgebra, LieAlgebra, casimir, relative_casimir
from .critical import CriticalEntry, enumerate_critical, render_table
from .grassmann import GrassmannConfig, stability_verdict

__all__ = [
    "RatMatrix",
    "Rational",
    "LieAlgebra",
    "DominantWeight",
    "InvalidAlgebra",
    "casimir",
    "relative_casimir",
    "CriticalEntry",
    "enumerate_critical",
    "render_table",
    "GrassmannConfig",
    "stability_verdict",
]
__version__ = "0.1.0"
