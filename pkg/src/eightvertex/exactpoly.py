"""Exact univariate polynomial and rational-function arithmetic over Q,
plus the small quadratic field Q(omega) with omega = exp(i pi/3).

Coefficient lists are dense, lowest degree first, always normalized (no
trailing zeros).  Division asserts a zero remainder unless asked for the
remainder explicitly.
"""

from fractions import Fraction


class NonExactDivision(ArithmeticError):
    pass


class Poly:
    """Dense polynomial with Fraction coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=(0,)):
        c = [Fraction(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [Fraction(0)]
        self.c = c

    @staticmethod
    def x():
        return Poly([0, 1])

    @property
    def degree(self):
        return len(self.c) - 1 if not self.is_zero() else -1

    def is_zero(self):
        return len(self.c) == 1 and self.c[0] == 0

    def __eq__(self, other):
        return self.c == _as_poly(other).c

    def __hash__(self):
        return hash(tuple(self.c))

    def __add__(self, other):
        o = _as_poly(other)
        n = max(len(self.c), len(o.c))
        return Poly([(self.c[i] if i < len(self.c) else 0)
                     + (o.c[i] if i < len(o.c) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        o = _as_poly(other)
        if self.is_zero() or o.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        o = _as_poly(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - len(o.c) + 1, 1)
        for k in range(len(rem) - len(o.c), -1, -1):
            coef = rem[k + len(o.c) - 1] / o.c[-1]
            q[k] = coef
            if coef:
                for j, b in enumerate(o.c):
                    rem[k + j] -= coef * b
        return Poly(q), Poly(rem)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([x / Fraction(other) for x in self.c])
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonExactDivision("nonzero remainder")
        return q

    def __pow__(self, k):
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, z):
        v = 0
        for coef in reversed(self.c):
            v = v * z + coef
        return v

    def deriv(self):
        if len(self.c) == 1:
            return Poly()
        return Poly([self.c[i] * i for i in range(1, len(self.c))])

    def d_alpha(self):
        """Derivative w.r.t. alpha = 1 - zeta^2 of a polynomial in zeta:
        -(1/(2 zeta)) d/dzeta; requires an even polynomial."""
        d = self.deriv()
        if not d.is_zero() and d.c[0] != 0:
            raise NonExactDivision("odd part present; alpha-derivative not polynomial")
        return Poly([-x / 2 for x in d.c[1:]]) if d.degree >= 1 else Poly()

    def compose(self, other):
        out = Poly()
        for coef in reversed(self.c):
            out = out * other + Poly([coef])
        return out

    def shift_reverse(self, degree):
        """z^degree * p(1/z); degree must be >= deg p."""
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        out = [Fraction(0)] * (degree + 1)
        for i, coef in enumerate(self.c):
            out[degree - i] = coef
        return Poly(out)

    def constant(self):
        return self.c[0]

    def leading(self):
        return self.c[-1]

    def is_even(self):
        return all(c == 0 for c in self.c[1::2])

    def __repr__(self):
        return "Poly(" + ", ".join(str(x) for x in self.c) + ")"


def _as_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    raise TypeError(f"cannot coerce {type(v)} to Poly")


def poly_gcd(a, b):
    a, b = Poly(a.c), Poly(b.c)
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if not a.is_zero():
        a = Poly([x / a.c[-1] for x in a.c])
    return a


class RationalFunc:
    """Reduced quotient of two Polys; exact field arithmetic over Q(z)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _as_poly(den if den is not None else 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num / g
            den = den / g
        lead = den.leading()
        num = Poly([x / lead for x in num.c])
        den = Poly([x / lead for x in den.c])
        self.num = num
        self.den = den

    @staticmethod
    def of(v):
        if isinstance(v, RationalFunc):
            return v
        return RationalFunc(_as_poly(v))

    def __add__(self, other):
        o = RationalFunc.of(other)
        return RationalFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunc.of(other))

    def __rsub__(self, other):
        return RationalFunc.of(other) - self

    def __mul__(self, other):
        o = RationalFunc.of(other)
        return RationalFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunc.of(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunc.of(other) / self

    def __eq__(self, other):
        o = RationalFunc.of(other)
        return self.num == o.num and self.den == o.den

    def is_zero(self):
        return self.num.is_zero()

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def as_poly(self):
        if self.den.degree != 0:
            raise NonExactDivision("denominator is not constant")
        return Poly([x / self.den.c[0] for x in self.num.c])

    def deriv(self):
        return RationalFunc(self.num.deriv() * self.den - self.num * self.den.deriv(),
                            self.den * self.den)

    def __repr__(self):
        return f"RationalFunc({self.num!r}, {self.den!r})"


def lagrange_value_at(points, values, target):
    """Exact Lagrange evaluation at `target` given samples; values may be
    Fractions, Polys, or RationalFuncs (anything with +, *, scalar *)."""
    total = None
    for i, (xi, yi) in enumerate(zip(points, values)):
        li = Fraction(1)
        for j, xj in enumerate(points):
            if j != i:
                li *= Fraction(target - xj, 1) / (xi - xj)
        term = yi * li
        total = term if total is None else total + term
    return total


def lagrange_poly(points, values):
    """Exact interpolating Poly through (points, values) with Fraction data."""
    total = Poly()
    for i, (xi, yi) in enumerate(zip(points, values)):
        num = Poly([1])
        den = Fraction(1)
        for j, xj in enumerate(points):
            if j != i:
                num = num * Poly([-xj, 1])
                den *= (xi - xj)
        total = total + num * (Fraction(yi) / den)
    return total


class Cyclotomic:
    """Numbers a + b*omega with omega = exp(i pi/3); omega^2 = omega - 1."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def omega():
        return Cyclotomic(0, 1)

    @staticmethod
    def of(v):
        if isinstance(v, Cyclotomic):
            return v
        return Cyclotomic(v, 0)

    def __add__(self, other):
        o = Cyclotomic.of(other)
        return Cyclotomic(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Cyclotomic.of(other))

    def __rsub__(self, other):
        return Cyclotomic.of(other) - self

    def __mul__(self, other):
        o = Cyclotomic.of(other)
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd (w - 1)
        return Cyclotomic(self.a * o.a - self.b * o.b,
                          self.a * o.b + self.b * o.a + self.b * o.b)

    __rmul__ = __mul__

    def inverse(self):
        # conjugate in the ring: a + b - b w;  norm a^2 + a b + b^2
        nrm = self.a * self.a + self.a * self.b + self.b * self.b
        if nrm == 0:
            raise ZeroDivisionError("zero cyclotomic")
        return Cyclotomic((self.a + self.b) / nrm, -self.b / nrm)

    def __truediv__(self, other):
        return self * Cyclotomic.of(other).inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.of(other) / self

    def __eq__(self, other):
        o = Cyclotomic.of(other)
        return self.a == o.a and self.b == o.b

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_rational(self):
        return self.b == 0

    def to_complex(self):
        import cmath
        return complex(self.a) + complex(self.b) * cmath.exp(1j * cmath.pi / 3)

    def __repr__(self):
        return f"Cyclotomic({self.a}, {self.b})"
