"""Cylinder partition function Z_L = <Psi(-x)|Psi(x)> and its structure:
permutation symmetry, half-period invariance, the size-reduction at a
(x, x+eta) pair, and the half-specialized quantity X_n.

Every Z value carries one arbitrary scalar per configuration (the solver
is projective), so all identities are tested either through explicit
transport of normalization between related configurations, or through
analytic families with consistent scales (one remaining constant per
family, fixed at a reference point and validated at fresh points).
"""

import cmath
import math

import numpy as np

from .theta import ETA, theta
from .groundstate import (ThetaFamily, fit_ratio, solve, projective_residual,
                          pseudo_theta_basis)
from .lattice import SIGMA_Z, rcheck, r_scalar, two_site_operator


class PartitionValue:
    def __init__(self, L, xs, value):
        self.L = L
        self.xs = list(xs)
        self.value = value


def _canonical(v):
    k = int(np.argmax(np.abs(v)))
    return v / v[k]


def partition_value(L, xs, ctx, resolve=solve):
    """Z_L(xs) from two independent solves, bilinear pairing (no conjugate).

    The two kernel vectors are normalized so the largest amplitude is 1:
    deterministic, but each configuration still carries its own scale.
    For L = 1 this reproduces the convention Psi = (1, 1), hence Z_1 = 2.
    """
    plus = _canonical(resolve(L, list(xs), ctx).amplitudes)
    minus = _canonical(resolve(L, [-x for x in xs], ctx).amplitudes)
    return PartitionValue(L, xs, np.dot(minus, plus))


def check_symmetry(L, xs, i, ctx, resolve=solve):
    """|Z(.., x_{i+1}, x_i, ..) - Z(..)| / |Z| with normalization transported
    through the exchange relation on both half-cylinders."""
    xs = list(xs)
    xs_sw = list(xs)
    xs_sw[i], xs_sw[i + 1] = xs_sw[i + 1], xs_sw[i]
    A = resolve(L, xs, ctx).amplitudes
    Am = resolve(L, [-x for x in xs], ctx).amplitudes
    B = resolve(L, xs_sw, ctx).amplitudes
    Bm = resolve(L, [-x for x in xs_sw], ctx).amplitudes
    rp = r_scalar(xs[i + 1] - xs[i], ctx)
    rm = r_scalar(xs[i] - xs[i + 1], ctx)
    Rp = two_site_operator(rcheck(xs[i + 1] - xs[i], ctx), i, L)
    Rm = two_site_operator(rcheck(xs[i] - xs[i + 1], ctx), i, L)
    rho = fit_ratio(Rp @ A, B)
    rho_m = fit_ratio(Rm @ Am, Bm)
    z_plain = np.dot(Am, A)
    z_swapped = np.dot(Bm, B) * rho * rho_m / (rp * rm)
    return abs(z_swapped - z_plain) / abs(z_plain)


def check_pi_invariance(L, xs, i, ctx, resolve=solve):
    """|Z(.., x_i + pi, ..) - Z(..)| / |Z| via the half-period transport."""
    xs = list(xs)
    xs_sh = list(xs)
    xs_sh[i] = xs_sh[i] + math.pi
    S = np.eye(1, dtype=complex)
    for j in range(L):
        S = np.kron(S, np.eye(2) if j == i else SIGMA_Z)
    A = resolve(L, xs, ctx).amplitudes
    Am = resolve(L, [-x for x in xs], ctx).amplitudes
    C = resolve(L, xs_sh, ctx).amplitudes
    Cm = resolve(L, [-x for x in xs_sh], ctx).amplitudes
    rho = fit_ratio(S @ A, C)
    rho_m = fit_ratio(S @ Am, Cm)
    z_plain = np.dot(Am, A)
    z_shift = np.dot(Cm, C) * rho * rho_m
    return abs(z_shift - z_plain) / abs(z_plain)


class ZFamily:
    """Z along a line in parameter space, from a pair of eigenvector
    families (the configuration and its mirror), consistent up to one
    global constant."""

    def __init__(self, L, base_xs, ctx, motions=((0, 1, 0.0),), seed=0):
        self.L = L
        self.n = (L - 1) // 2
        self.ctx = ctx
        self.fam = ThetaFamily(L, base_xs, ctx, motions=motions, seed=seed)
        mirror_motions = [(s, -sg, -off) for s, sg, off in motions]
        self.fam_mirror = ThetaFamily(L, [-x for x in base_xs], ctx,
                                      motions=mirror_motions, seed=seed + 1)

    def __call__(self, t):
        return np.dot(self.fam_mirror(t), self.fam(t))

    def derivative(self, t, step=1e-4):
        """Central difference with one Richardson refinement."""
        d1 = (self(t + step) - self(t - step)) / (2 * step)
        d2 = (self(t + step / 2) - self(t - step / 2)) / step
        return (4 * d2 - d1) / 3.0

    def degree_membership(self, n_points=None, seed=5):
        """Residual of sampled Z values in the space of theta functions of
        degree 2n per moving slot and nome p (quasi-period pi*tau)."""
        D = 2 * self.n * len(self.fam.motions)
        rng = np.random.default_rng(seed)
        K = n_points if n_points is not None else 2 * (2 * D) + 4
        ts = rng.uniform(0.0, 2 * math.pi, K)
        t0, t1 = ts[0], ts[1]
        mult0 = self(t0 + self.ctx.pi_tau) * cmath.exp(2j * D * t0) / self(t0)
        mult1 = self(t1 + self.ctx.pi_tau) * cmath.exp(2j * D * t1) / self(t1)
        mult_spread = abs(mult0 - mult1) / abs(mult0)
        pts = np.concatenate([ts, ts + self.ctx.pi_tau])
        vals = np.array([self(t) for t in pts])
        B = pseudo_theta_basis(pts, D, mult0, 1, self.ctx.p)
        coeffs, *_ = np.linalg.lstsq(B, vals, rcond=None)
        resid = np.linalg.norm(B @ coeffs - vals) / np.linalg.norm(vals)
        return resid, mult_spread

    def pi_shift_residual(self, t):
        return abs(self(t + math.pi) / self(t) - 1.0)


def check_recurrence_Z(L, ctx, seed=0, t_points=(0.8, 1.7, 2.6)):
    """Size reduction Z_L(.., x, x+eta) / Z_{L-2}(..) = prod th^2(x-eta-x_i)
    in the paper normalization; here one scalar per L is fitted at the first
    slider point and must survive the remaining ones.

    The slider is x_1; the (x, x+eta) pair sits in the last two slots.
    Returns max |c(t_k)/c(t_0) - 1| over fresh points.
    """
    rng = np.random.default_rng(seed + 3000)
    base = list(rng.uniform(0.0, 2.5, L))
    y = base[L - 2]
    base[L - 1] = y + ETA
    zf_L = ZFamily(L, base, ctx, seed=seed)
    base_small = base[:L - 2]
    zf_small = ZFamily(L - 2, base_small, ctx, seed=seed + 7)

    def ratio(t):
        pref = theta(1, y - ETA - t, ctx.p) ** 2
        for xi in base_small[1:]:
            pref *= theta(1, y - ETA - xi, ctx.p) ** 2
        return zf_L(t) / (pref * zf_small(t))

    c0 = ratio(t_points[0])
    devs = [abs(ratio(t) / c0 - 1.0) for t in t_points[1:]]
    return max(devs), (zf_L, zf_small)


class DoubleZeroViolation(RuntimeError):
    pass


class HalfSpecialized:
    """X_n extracted from the half-specialized Z along the slider x_1 = t,
    x_{1+n} = -t, with x_L = 0 and the other pairs frozen."""

    def __init__(self, n, xs_rest, ctx, seed=0):
        # xs_rest: values x_2..x_n (may be empty for n = 1)
        if len(xs_rest) != n - 1:
            raise ValueError("xs_rest must hold n-1 frozen values")
        self.n = n
        self.L = 2 * n + 1
        self.ctx = ctx
        self.xs_rest = list(xs_rest)
        base = [0.0] * self.L
        for k, xv in enumerate(xs_rest):
            base[1 + k] = xv
            base[1 + n + k] = -xv
        base[self.L - 1] = 0.0
        self.zf = ZFamily(self.L, base, ctx,
                          motions=((0, 1, 0.0), (n, -1, 0.0)), seed=seed)
        pref = 1.0 + 0j
        for xv in xs_rest:
            pref *= theta(1, xv - ETA, ctx.p) ** 2 * theta(1, xv + ETA, ctx.p) ** 2
        self._frozen_prefactor = pref

    def z_value(self, t):
        return self.zf(t)

    def x_value(self, t):
        pref = (theta(1, t - ETA, self.ctx.p) ** 2
                * theta(1, t + ETA, self.ctx.p) ** 2 * self._frozen_prefactor)
        return self.zf(t) / pref

    def double_zero_residuals(self, reference_t=0.9):
        """Value and first-derivative magnitude of Z at the wheel-induced
        zero t = -2 eta, relative to a reference scale."""
        scale = abs(self.zf(reference_t))
        dscale = abs(self.zf.derivative(reference_t))
        val = abs(self.zf(-2 * ETA)) / scale
        der = abs(self.zf.derivative(-2 * ETA)) / max(dscale, scale)
        return val, der

    def evenness_residual(self, t):
        return abs(self.x_value(-t) / self.x_value(t) - 1.0)
