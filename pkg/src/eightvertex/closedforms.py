"""Elliptic closed forms: the Pfaffian families A_n and B_n, the
Tsuchiya-type determinant H_2m, the antisymmetrized S_2m with its Slater
representation, and the assembled X_n.

All evaluators are float-complex; the exact-rational twins live in
rationalforms.  Arguments are the elliptic spectral variables x_i; theta
symbols with no explicit nome mean theta_k(.; p).
"""

import cmath
import math

import numpy as np

from .theta import ETA, theta
from .pfaffian import pfaffian


class DenominatorZero(ZeroDivisionError):
    pass


def h_quad(x, y, ctx):
    """h(x,y) = th(eta+x-y) th(eta+x+y) th(eta-x-y) th(eta-x+y)."""
    th = ctx.th
    return (th(ETA + x - y) * th(ETA + x + y) * th(ETA - x - y) * th(ETA - x + y))


def a2(x, y, ctx):
    """Symmetric even theta function of degree 2 in each argument; the seed
    of the Pfaffian family."""
    nu = ctx.nu
    th = ctx.th_k
    return -nu ** 2 * (th(2, ETA) / th(2, 0)) * (
        th(3, x + ETA) * th(3, x - ETA) * th(4, y) ** 2
        + th(4, x + ETA) * th(4, x - ETA) * th(3, y) ** 2)


def f_entry(x, y, ctx):
    den = h_quad(x, y, ctx)
    if abs(den) < 1e-300:
        raise DenominatorZero("h(x,y) = 0")
    return ctx.th(x - y) * ctx.th(x + y) * a2(x, y, ctx) / den


def _skew_matrix(xs, ctx, entry):
    n = len(xs)
    m2 = 2 * ((n + 1) // 2)
    M = np.zeros((m2, m2), dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            v = entry(xs[i], xs[j])
            M[i, j] = v
            M[j, i] = -v
    if n % 2:
        for i in range(n):
            M[i, m2 - 1] = 1.0
            M[m2 - 1, i] = -1.0
    return M


def A_elliptic(xs, ctx):
    """A_n: prefactor prod h/(th th) times the bordered Pfaffian."""
    n = len(xs)
    if n == 0:
        return 1.0 + 0j
    pref = 1.0 + 0j
    for i in range(n):
        for j in range(i + 1, n):
            den = ctx.th(xs[i] - xs[j]) * ctx.th(xs[i] + xs[j])
            if abs(den) < 1e-300:
                raise DenominatorZero("coincident arguments")
            pref *= h_quad(xs[i], xs[j], ctx) / den
    M = _skew_matrix(xs, ctx, lambda a, b: f_entry(a, b, ctx))
    return pref * pfaffian(M, check_skew=False)


def B_elliptic(xs, ctx):
    """B_n = A_{n+1}(.., beta_2)."""
    return A_elliptic(list(xs) + [ctx.beta2], ctx)


def H_elliptic(xs, ctx):
    """H_2m with the first m arguments as one group and the rest as the
    other; fully symmetric in all 2m arguments despite the asymmetric
    expression."""
    n = len(xs)
    if n == 0:
        return 1.0 + 0j
    if n % 2:
        raise ValueError("H takes an even number of arguments")
    m = n // 2
    g1, g2 = xs[:m], xs[m:]
    num = 1.0 + 0j
    for a in g1:
        for b in g2:
            num *= h_quad(a, b, ctx)
    den = 1.0 + 0j
    for g in (g1, g2):
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                den *= ctx.th(g[i] - g[j]) * ctx.th(g[i] + g[j])
    if abs(den) < 1e-300:
        raise DenominatorZero("coincident arguments within a group")
    M = np.zeros((m, m), dtype=complex)
    for i, a in enumerate(g1):
        for j, b in enumerate(g2):
            hv = h_quad(a, b, ctx)
            if abs(hv) < 1e-300:
                raise DenominatorZero("h vanishes inside the determinant")
            M[i, j] = 1.0 / hv
    return num / den * np.linalg.det(M)


def X_elliptic(xs, ctx):
    """X_n = (-nu^2 kappa^2)^{-n} A_n B_n."""
    n = len(xs)
    c = (-ctx.nu ** 2 * ctx.kappa ** 2) ** (-n)
    return c * A_elliptic(xs, ctx) * B_elliptic(xs, ctx)


def phi(x, ctx):
    """phi(x) = th(2x)/th(x), the ratio entering the X-string reduction."""
    return ctx.th(2 * x) / ctx.th(x)


def kappa_k(k, n, ctx):
    """Pseudo-periodicity constants: kappa_2 = 1, kappa_3 = kappa_4 =
    -nu^{2n-1} (n is the size of the X being reduced)."""
    if k == 2:
        return 1.0 + 0j
    return -ctx.nu ** (2 * n - 1)


def S_from_H(xs, ctx):
    """S_2m = prod_{i<j} th(x_i-x_j) prod_{i<=j} th(x_i+x_j) H_2m(xs);
    skew-symmetric, odd theta of degree 6m in each argument."""
    n = len(xs)
    pref = 1.0 + 0j
    for i in range(n):
        for j in range(i + 1, n):
            pref *= ctx.th(xs[i] - xs[j])
    for i in range(n):
        for j in range(i, n):
            pref *= ctx.th(xs[i] + xs[j])
    return pref * H_elliptic(xs, ctx)


def slater_basis(k, x, m, ctx):
    """s_k(x) = e^{2ikx} theta3(k pi tau + 6m x; p^{6m})
               - e^{-2ikx} theta3(k pi tau - 6m x; p^{6m})."""
    q = ctx.p ** (6 * m)
    pt = ctx.pi_tau
    return (cmath.exp(2j * k * x) * theta(3, k * pt + 6 * m * x, q)
            - cmath.exp(-2j * k * x) * theta(3, k * pt - 6 * m * x, q))


def slater_indices(m):
    """(1, 2, 4, 5, ..., 3m-2, 3m-1): the 2m indices not divisible by 3."""
    return [k for k in range(1, 3 * m) if k % 3 != 0]


def slater_determinant(xs, ctx):
    """det s_{k_j}(x_i); proportional to S_2m (constant not fixed)."""
    n = len(xs)
    if n % 2:
        raise ValueError("even number of arguments required")
    m = n // 2
    ks = slater_indices(m)
    M = np.array([[slater_basis(k, x, m, ctx) for k in ks] for x in xs])
    return np.linalg.det(M)
