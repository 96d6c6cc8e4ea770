"""Jacobi theta functions by truncated q-series, and the model constants.

Conventions (standard Jacobi series):
    theta1(x,q) = 2 q^{1/4} sum_k (-1)^k q^{k(k+1)} sin((2k+1)x)
    theta2(x,q) = 2 q^{1/4} sum_k q^{k(k+1)} cos((2k+1)x)
    theta3(x,q) = 1 + 2 sum_{k>=1} q^{k^2} cos(2kx)
    theta4(x,q) = 1 + 2 sum_{k>=1} (-1)^k q^{k^2} cos(2kx)

The crossing parameter is fixed at eta = pi/3 throughout.  Weights are
built from nome p^2; the partition-function layer uses nome p.
"""

import cmath
import math

import numpy as np

ETA = math.pi / 3.0

DEFAULT_CUTOFF = 1e-15
MAX_TERMS = 200
MAX_NOME = 0.7


class ThetaError(Exception):
    pass


class NonConvergent(ThetaError):
    """|nome| >= 1, or the series did not reach the cutoff."""


def theta(kind, x, nome, cutoff=DEFAULT_CUTOFF):
    """theta_kind(x; nome) for kind in 1..4, complex x, |nome| < 1."""
    q = complex(nome)
    x = complex(x)
    if abs(q) >= 1.0:
        raise NonConvergent(f"|nome| = {abs(q)} >= 1")
    if kind in (1, 2):
        s = 0j
        qpow = 1.0 + 0j  # q^{k(k+1)}
        for k in range(MAX_TERMS):
            osc = cmath.sin((2 * k + 1) * x) if kind == 1 else cmath.cos((2 * k + 1) * x)
            term = qpow * osc
            if kind == 1 and k % 2:
                term = -term
            s += term
            if abs(term) <= cutoff * max(abs(s), 1e-300) and k >= 2:
                break
            qpow *= q ** (2 * k + 2)
        else:
            raise NonConvergent("series cutoff not reached")
        return 2.0 * q ** 0.25 * s
    if kind in (3, 4):
        s = 1.0 + 0j
        for k in range(1, MAX_TERMS):
            term = 2.0 * q ** (k * k) * cmath.cos(2 * k * x)
            if kind == 4 and k % 2:
                term = -term
            s += term
            if abs(term) <= cutoff * max(abs(s), 1e-300) and k >= 2:
                break
        else:
            raise NonConvergent("series cutoff not reached")
        return s
    raise ValueError(f"theta kind must be 1..4, got {kind}")


class EllipticContext:
    """Nome p and every derived constant of the combinatorial line.

    Attributes
    ----------
    p, p2 : nome and its square.
    pi_tau : pi*tau with p = exp(i pi tau); purely imaginary for real p.
    zeta : (theta1(eta;p^2)/theta4(eta;p^2))^2, real in [0,1) for real p.
    kappa : theta2(eta;p) theta3(eta;p) theta4(eta;p).
    nu : exp(-2 pi i/3)/sqrt(p).
    beta2, beta3, beta4 : the three nontrivial solutions of 2b+eta = 0
        modulo (pi, pi tau).
    J2, J3, J4 : coupling constants -1/2, 1/(1+zeta), 1/(1-zeta).
    """

    def __init__(self, p, cutoff=DEFAULT_CUTOFF):
        p = complex(p)
        if abs(p) >= 1.0:
            raise NonConvergent(f"|p| = {abs(p)} >= 1")
        if abs(p) > MAX_NOME:
            raise ValueError(f"|p| = {abs(p)} beyond supported range {MAX_NOME}")
        self.p = p
        self.p2 = p * p
        self.cutoff = cutoff
        self.eta = ETA
        if p != 0:
            self.pi_tau = -1j * cmath.log(p)
        else:
            self.pi_tau = complex(math.inf)
        z = self.theta(1, ETA, self.p2) / self.theta(4, ETA, self.p2)
        zeta = z * z
        if abs(zeta.imag) < 1e-12 * max(1.0, abs(zeta.real)):
            zeta = zeta.real
        self.zeta = zeta
        self.kappa = (self.theta(2, ETA, p) * self.theta(3, ETA, p)
                      * self.theta(4, ETA, p)) if p != 0 else None
        self.nu = cmath.exp(-2j * math.pi / 3.0) / cmath.sqrt(p) if p != 0 else None
        self.beta2 = math.pi / 2.0 + ETA
        self.beta3 = math.pi / 2.0 + self.pi_tau / 2.0 + ETA if p != 0 else None
        self.beta4 = self.pi_tau / 2.0 + ETA if p != 0 else None
        self.J2 = -0.5
        self.J3 = 1.0 / (1.0 + self.zeta)
        self.J4 = 1.0 / (1.0 - self.zeta)

    def theta(self, kind, x, nome=None):
        """theta_kind at this context's cutoff; nome defaults to p (not p^2)."""
        if nome is None:
            nome = self.p
        return theta(kind, x, nome, self.cutoff)

    def th(self, x):
        """theta1(x; p), the workhorse of the partition-function layer."""
        return theta(1, x, self.p, self.cutoff)

    def th_k(self, kind, x):
        return theta(kind, x, self.p, self.cutoff)

    def beta(self, k):
        return {2: self.beta2, 3: self.beta3, 4: self.beta4}[k]

    def J(self, k):
        return {2: self.J2, 3: self.J3, 4: self.J4}[k]

    def __repr__(self):
        return f"EllipticContext(p={self.p}, zeta={self.zeta})"


def build_context(p, cutoff=DEFAULT_CUTOFF):
    return EllipticContext(p, cutoff)


class PoleError(ValueError):
    """Evaluation at a pole of the uniformization map."""


def uniformize(x, ctx):
    """w(x) = (1-zeta^2)^{-1/3} theta1(x;p)^2 / (theta1(x-eta;p) theta1(x+eta;p)).

    Maps beta_k to J_k and 0 to 0; turns the theta-function identities of
    the closed forms into rational ones.
    """
    num = ctx.th(x) ** 2
    den = ctx.th(x - ETA) * ctx.th(x + ETA)
    if abs(den) < 1e-300:
        raise PoleError(f"uniformization pole at x = {x}")
    return (1.0 - ctx.zeta ** 2) ** (-1.0 / 3.0) * num / den
