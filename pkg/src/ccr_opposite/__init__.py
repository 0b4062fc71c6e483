"""Opposites of multiparameter CCR flows on lattice discretisations.

Builds the opposite of the shift representation ``V^A`` of a P-module
exactly, verifies the operator identities behind it, and certifies that for
a pointed cone in two or more dimensions the CCR flow of ``V^P`` is not
cocycle conjugate to its opposite.
"""

__version__ = "0.1.0"

from .cones import Cone, archimedean_bound, cone_from_generators, outside_witness
from .hilbert import RepContext, SparseVector, inner
from .modules import (
    ConeModule,
    Opposite,
    Window,
    certify_asymmetry,
    cone_module,
    member,
    opposite,
    translate,
    translate_equivalent,
)

__all__ = [
    "Cone",
    "ConeModule",
    "Opposite",
    "RepContext",
    "SparseVector",
    "Window",
    "archimedean_bound",
    "certify_asymmetry",
    "cone_from_generators",
    "cone_module",
    "inner",
    "member",
    "opposite",
    "outside_witness",
    "translate",
    "translate_equivalent",
]
