"""Higher Auslander-Reiten theory for bound quiver algebras.

Computes d-cluster-tilting data, d-exact sequence machinery, covers,
sigma, and d-Auslander-Reiten sequences both in an ambient
d-cluster-tilting category and in a d-extension-closed subcategory.
"""

from .linalg import FieldSpec, Matrix, rref, solve, kernel_basis
from .errors import (
    DarseqError,
    ParseError,
    ValidationError,
    VerificationFailed,
    NotClusterTilting,
    LiftFailed,
    NonSplitEndomorphismRing,
    InfiniteDimensional,
    BoundExceeded,
    NoSuchSequence,
    NotExact,
)

__all__ = [
    "FieldSpec",
    "Matrix",
    "rref",
    "solve",
    "kernel_basis",
    "DarseqError",
    "ParseError",
    "ValidationError",
    "VerificationFailed",
    "NotClusterTilting",
    "LiftFailed",
    "NonSplitEndomorphismRing",
    "InfiniteDimensional",
    "BoundExceeded",
    "NoSuchSequence",
    "NotExact",
]
