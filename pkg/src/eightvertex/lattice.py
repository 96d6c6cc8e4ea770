"""Boltzmann weights, R-matrices, the inhomogeneous transfer matrix, spin
operators, and the XYZ Hamiltonian.

Basis conventions (frozen): site 1 is the most significant bit of the
configuration index; spin up = bit 0.  Dense complex matrices throughout;
the largest supported size is L = 9 (dimension 512).
"""

import cmath
import math

import numpy as np

from .theta import ETA, theta

MAX_L = 9

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, 1j], [-1j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

# tensor-swap on C^2 x C^2 and the singlet projector P = (1 - swap)/2
PERM = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
PROJ = 0.5 * (np.eye(4) - PERM)
SINGLET = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex)


class Weights:
    """The four vertex weights at spectral parameter x (nome p^2)."""

    def __init__(self, x, ctx):
        p2 = ctx.p2
        self.x = x
        self.ctx = ctx
        self.a = theta(4, 2 * ETA, p2) * theta(4, x, p2) * theta(1, x + 2 * ETA, p2)
        self.b = theta(4, 2 * ETA, p2) * theta(1, x, p2) * theta(4, x + 2 * ETA, p2)
        self.c = theta(1, 2 * ETA, p2) * theta(4, x, p2) * theta(4, x + 2 * ETA, p2)
        self.d = theta(1, 2 * ETA, p2) * theta(1, x, p2) * theta(1, x + 2 * ETA, p2)


def weights(x, ctx):
    return Weights(x, ctx)


def r_scalar(x, ctx):
    """r(x) = theta4(0;p^2) theta1(x+eta;p^2) theta4(x+eta;p^2) = a(x)+b(x)."""
    p2 = ctx.p2
    return theta(4, 0, p2) * theta(1, x + ETA, p2) * theta(4, x + ETA, p2)


def r_matrix(x, ctx):
    w = Weights(x, ctx)
    return np.array([
        [w.a, 0, 0, w.d],
        [0, w.b, w.c, 0],
        [0, w.c, w.b, 0],
        [w.d, 0, 0, w.a],
    ], dtype=complex)


def rcheck(x, ctx):
    """Rcheck(x) = swap . R(x); satisfies the braid-form Yang-Baxter and
    unitarity Rcheck(x) Rcheck(-x) = r(x) r(-x) Id."""
    w = Weights(x, ctx)
    return np.array([
        [w.a, 0, 0, w.d],
        [0, w.c, w.b, 0],
        [0, w.b, w.c, 0],
        [w.d, 0, 0, w.a],
    ], dtype=complex)


def site_operator(op, i, L):
    """Embed a one-site operator at site i (0-based) of an L-site chain."""
    return np.kron(np.kron(np.eye(2 ** i), op), np.eye(2 ** (L - i - 1)))


def two_site_operator(op4, i, L):
    """Embed a two-site operator at neighboring sites (i, i+1), i+1 < L."""
    return np.kron(np.kron(np.eye(2 ** i), op4), np.eye(2 ** (L - i - 2)))


def flip_all(L):
    M = np.eye(1, dtype=complex)
    for _ in range(L):
        M = np.kron(M, SIGMA_X)
    return M


def rotation_operator(L):
    """Cyclic site shift: |s1 s2 ... sL> -> |s2 ... sL s1>."""
    dim = 2 ** L
    M = np.zeros((dim, dim), dtype=complex)
    for a in range(dim):
        top = (a >> (L - 1)) & 1
        b = ((a << 1) & (dim - 1)) | top
        M[b, a] = 1.0
    return M


class SizeOverflow(ValueError):
    pass


class TransferMatrix:
    def __init__(self, L, u, xs, ctx, matrix):
        self.L = L
        self.u = u
        self.xs = list(xs)
        self.ctx = ctx
        self.matrix = matrix


def transfer(L, u, xs, ctx):
    """Transfer matrix Tr_0 R_{01}(x_1-u) ... R_{0L}(x_L-u) on (C^2)^{x L}.

    Assembled by contracting the 2x2 auxiliary space through ordered
    2x2-block products; the trace is the sum of the two diagonal blocks.
    """
    if L % 2 == 0:
        raise ValueError("odd L required on the combinatorial line")
    if L > MAX_L:
        raise SizeOverflow(f"L = {L} exceeds supported maximum {MAX_L}")
    if len(xs) != L:
        raise ValueError("need exactly L spectral parameters")
    blocks = [[np.eye(1, dtype=complex), np.zeros((1, 1), dtype=complex)],
              [np.zeros((1, 1), dtype=complex), np.eye(1, dtype=complex)]]
    for i in range(L):
        w = Weights(xs[i] - u, ctx)
        W = [[np.array([[w.a, 0], [0, w.b]], dtype=complex),
              np.array([[0, w.d], [w.c, 0]], dtype=complex)],
             [np.array([[0, w.c], [w.d, 0]], dtype=complex),
              np.array([[w.b, 0], [0, w.a]], dtype=complex)]]
        nxt = [[None, None], [None, None]]
        for a in range(2):
            for c in range(2):
                nxt[a][c] = np.kron(blocks[a][0], W[0][c]) + np.kron(blocks[a][1], W[1][c])
        blocks = nxt
    # transpose so the displayed intertwining/exchange relations hold verbatim
    mat = (blocks[0][0] + blocks[1][1]).T
    return TransferMatrix(L, u, xs, ctx, mat)


def transfer_eigenvalue(L, u, xs, ctx):
    """t_L(u|x_1..x_L) = prod_i r(x_i - u)."""
    val = 1.0 + 0j
    for x in xs:
        val *= r_scalar(x - u, ctx)
    return val


def xyz_hamiltonian(L, zeta):
    """Periodic XYZ Hamiltonian with couplings (J4, J3, J2) on (xx, yy, zz),
    and the simple eigenvalue E_L = -(L/2)(J2+J3+J4)."""
    if not 0 <= zeta < 1:
        raise ValueError("zeta must lie in [0, 1)")
    J2, J3, J4 = -0.5, 1.0 / (1.0 + zeta), 1.0 / (1.0 - zeta)
    dim = 2 ** L
    H = np.zeros((dim, dim), dtype=complex)
    for i in range(L):
        j = (i + 1) % L
        for coupling, op in ((J4, SIGMA_X), (J3, SIGMA_Y), (J2, SIGMA_Z)):
            H -= 0.5 * coupling * site_operator(op, i, L) @ site_operator(op, j, L)
    E = -(L / 2.0) * (J2 + J3 + J4)
    return H, E
