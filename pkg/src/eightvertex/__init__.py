"""Verification and computation toolkit for the eight-vertex model on its
combinatorial line (crossing parameter pi/3, odd size, periodic chain).

Subpackages cover: numeric theta functions and derived constants, the
inhomogeneous transfer matrix and its distinguished eigenvector, the
cylinder partition function, Pfaffian/determinant closed forms (elliptic
and exact-rational), exact polynomial recurrences for the homogeneous
limit, and both degeneration limits.
"""

from .theta import EllipticContext, theta, build_context, uniformize
from .lattice import Weights, weights, r_scalar, r_matrix, rcheck, transfer, transfer_eigenvalue, xyz_hamiltonian
from .groundstate import GroundState, solve, ThetaFamily

__all__ = [
    "EllipticContext", "theta", "build_context", "uniformize",
    "Weights", "weights", "r_scalar", "r_matrix", "rcheck",
    "transfer", "transfer_eigenvalue", "xyz_hamiltonian",
    "GroundState", "solve", "ThetaFamily",
]

__version__ = "0.1.0"
