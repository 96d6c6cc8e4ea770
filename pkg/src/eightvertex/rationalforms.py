"""Exact-rational twins of the elliptic closed forms, in the uniformized
variable w.  Everything here is polynomial identity territory: zeta may be
a Fraction, a RationalFunc (symbolic zeta), or a Cyclotomic number, and
all evaluations are exact.

Core objects: h(w,w'), A2(w,w'), the Pfaffian families A_n and B_n, the
determinant H_2m, X_n = 2^{n+1} A_n B_n, the coupling-permuting zeta
transformations, the wheel/2-string system, and the Hankel form of the
two-group determinant.
"""

from fractions import Fraction

from .exactpoly import Poly, RationalFunc, lagrange_value_at
from .pfaffian import pfaffian, det_fraction, det_field


def J_values(zeta):
    one = zeta - zeta + 1  # 1 in the coefficient field of zeta
    return {"J2": -one / 2, "J3": one / (1 + zeta), "J4": one / (1 - zeta)}


def h_rational(u, v, zeta):
    """h(w,w') = 1 - (3+zeta^2) w w' + (1-zeta^2) w w' (w+w'); vanishing
    detects a 2-string between the two arguments."""
    return 1 - (3 + zeta * zeta) * u * v + (1 - zeta * zeta) * u * v * (u + v)


def A2_rational(u, v, zeta):
    return u * v - (u + v) + (1 + zeta * zeta) / (1 - zeta * zeta)


def f_rational(u, v, zeta):
    return (u - v) * A2_rational(u, v, zeta) / h_rational(u, v, zeta)


def _det(M, zeta):
    if isinstance(zeta, Fraction) or isinstance(zeta, int):
        return det_fraction(M)
    return det_field(M)


def A_rational(ws, zeta):
    """A_n(w_1..w_n) = prod_{i<j} h/(w_i-w_j) times the bordered Pfaffian
    of f-entries; a polynomial in the w_i and in zeta up to (1-zeta^2)
    powers."""
    n = len(ws)
    if n == 0:
        return Fraction(1) if isinstance(zeta, (int, Fraction)) else zeta - zeta + 1
    pref = zeta - zeta + 1
    for i in range(n):
        for j in range(i + 1, n):
            pref = pref * h_rational(ws[i], ws[j], zeta) / (ws[i] - ws[j])
    m2 = 2 * ((n + 1) // 2)
    zero = zeta - zeta
    M = [[zero for _ in range(m2)] for _ in range(m2)]
    for i in range(n):
        for j in range(i + 1, n):
            v = f_rational(ws[i], ws[j], zeta)
            M[i][j] = v
            M[j][i] = -v
    if n % 2:
        one = zero + 1
        for i in range(n):
            M[i][m2 - 1] = one
            M[m2 - 1][i] = -one
    return pref * pfaffian(M, check_skew=False)


def B_rational(ws, zeta):
    return A_rational(list(ws) + [J_values(zeta)["J2"]], zeta)


def H_rational(ws, zeta):
    """H_2m(w): first half of the arguments against the second half."""
    n = len(ws)
    if n == 0:
        return Fraction(1) if isinstance(zeta, (int, Fraction)) else zeta - zeta + 1
    if n % 2:
        raise ValueError("even number of arguments required")
    m = n // 2
    g1, g2 = ws[:m], ws[m:]
    num = zeta - zeta + 1
    for a in g1:
        for b in g2:
            num = num * h_rational(a, b, zeta)
    den = zeta - zeta + 1
    for g in (g1, g2):
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                den = den * (g[i] - g[j])
    M = [[1 / h_rational(a, b, zeta) for b in g2] for a in g1]
    return num / den * _det(M, zeta)


def H_rational_alt(ws, zeta):
    """H_{2m+2}(w_1..w_2m, J3, J4) through the A2/h-entry determinant on the
    2m finite arguments alone."""
    n = len(ws)
    if n % 2:
        raise ValueError("even number of arguments required")
    m = n // 2
    g1, g2 = ws[:m], ws[m:]
    num = zeta - zeta + 1
    for a in g1:
        for b in g2:
            num = num * h_rational(a, b, zeta)
    den = zeta - zeta + 1
    for g in (g1, g2):
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                den = den * (g[i] - g[j])
    M = [[A2_rational(a, b, zeta) / h_rational(a, b, zeta) for b in g2] for a in g1]
    return num / den * _det(M, zeta)


def X_rational(ws, zeta):
    n = len(ws)
    return 2 ** (n + 1) * A_rational(ws, zeta) * B_rational(ws, zeta)


def X_product_formula(ws, zeta):
    """X_n = 2^{n+1} prod over subsets S of {J2,J3,J4} with |S| = n (mod 2)
    of H_{n+|S|}(ws, S)."""
    n = len(ws)
    J = J_values(zeta)
    out = zeta - zeta + 1
    subsets = [[], ["J2"], ["J3"], ["J4"], ["J2", "J3"], ["J2", "J4"],
               ["J3", "J4"], ["J2", "J3", "J4"]]
    for S in subsets:
        if len(S) % 2 != n % 2:
            continue
        out = out * H_rational(list(ws) + [J[s] for s in S], zeta)
    return 2 ** (n + 1) * out


# ---------------------------------------------------------------------------
# coupling-permuting transformations of zeta


def zeta_mirror(zeta):
    """zeta -> -zeta swaps J3 and J4 and fixes h: h_z(u,v) = h_{-z}(u,v)."""
    return -zeta


def zeta_moebius(zeta):
    """zeta -> (zeta+3)/(zeta-1), an involution swapping J2 and J4 after the
    rescaling w -> lam w with lam = (zeta-1)/2."""
    return (zeta + 3) / (zeta - 1)


def moebius_lambda(zeta):
    return (zeta - 1) / 2


def wheel_roots_coeffs(w, zeta):
    """Vieta data of h(w, .) = 0: the two partners completing w to a wheel.
    Returns (sum, product) of the roots."""
    s = (3 + zeta * zeta) / (1 - zeta * zeta) - w
    p = 1 / ((1 - zeta * zeta) * w)
    return s, p


def wheel_system_residuals(w, zeta):
    """Check that (w, w', w'') with w', w'' the roots of h(w, .) satisfies
    the symmetric wheel system and that all three pair h's vanish.  Works
    on the symmetric functions, so no root extraction is needed.
    Returns (sum residual, product residual, h(w',w'') value)."""
    s2, p2 = wheel_roots_coeffs(w, zeta)
    total = (3 + zeta * zeta) / (1 - zeta * zeta)
    res_sum = (w + s2) - total
    res_prod = w * p2 - 1 / (1 - zeta * zeta)
    # h(w', w'') expressed through the symmetric functions of the roots
    hpp = 1 - (3 + zeta * zeta) * p2 + (1 - zeta * zeta) * p2 * s2
    return res_sum, res_prod, hpp


# ---------------------------------------------------------------------------
# Hankel / two-group determinant identity

def _phi2_den(w, zeta):
    return 1 + (3 + zeta * zeta) * w * w - (1 - zeta * zeta) * w ** 3


def delta_two_group(ws, zeta):
    """Delta_2m = det(phi1(w_i,w_j)/phi2(w_i,w_j)) / prod_same phi2(w_i,w_j)
    with phi1(w) = w and phi2(w) = w / (1 + (3+z^2) w^2 - (1-z^2) w^3)."""
    n = len(ws)
    m = n // 2
    g1, g2 = ws[:m], ws[m:]
    phi2 = [w / _phi2_den(w, zeta) for w in ws]
    phi1 = list(ws)
    M = [[(phi1[i] - phi1[m + j]) / (phi2[i] - phi2[m + j]) for j in range(m)]
         for i in range(m)]
    den = zeta - zeta + 1
    for grp in (range(m), range(m, n)):
        grp = list(grp)
        for a in range(len(grp)):
            for b in range(a + 1, len(grp)):
                den = den * (phi2[grp[a]] - phi2[grp[b]])
    return _det(M, zeta) / den


def delta_hankel(ws, zeta):
    """Hankel form det(s_{i+j}) with moments s_k = sum_i phi2(w_i)^k
    phi1(w_i) / prod_{j != i}(phi2(w_i) - phi2(w_j))."""
    n = len(ws)
    m = n // 2
    phi2 = [w / _phi2_den(w, zeta) for w in ws]
    phi1 = list(ws)
    moments = []
    for k in range(2 * m - 1):
        s = zeta - zeta
        for i in range(n):
            term = phi1[i]
            for j in range(n):
                if j != i:
                    term = term / (phi2[i] - phi2[j])
            s = s + term * phi2[i] ** k
        moments.append(s)
    M = [[moments[i + j] for j in range(m)] for i in range(m)]
    return _det(M, zeta)


# ---------------------------------------------------------------------------
# special values at zeta = 1 (alpha = 0)


def symbolic_zeta():
    """zeta as a RationalFunc generator, for limits involving J4 -> infinity."""
    return RationalFunc(Poly.x())


def H_at_zeta1_with_J4(ws_finite, m):
    """H_2m(w_1..w_{2m-1}, J4) evaluated exactly in the limit zeta -> 1 by
    carrying zeta symbolically and cancelling the (1-zeta) poles."""
    z = symbolic_zeta()
    ws = [RationalFunc(Poly([Fraction(w)])) for w in ws_finite]
    val = H_rational(ws + [J_values(z)["J4"]], z)
    num, den = val.num, val.den
    return num(Fraction(1)) / den(Fraction(1))
