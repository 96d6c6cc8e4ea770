"""Pfaffian by skew-symmetric elimination with pivoting, plus exact
determinants over Fractions.  Works for complex floats and for exact
Fraction entries alike (division stays exact in the rational case)."""

from fractions import Fraction

import numpy as np


class OddSize(ValueError):
    pass


class NotSkew(ValueError):
    pass


def _abs(x):
    return abs(x)


def pfaffian(matrix, check_skew=True, tol=1e-10):
    """Pfaffian of an even-dimensional skew-symmetric matrix.

    Accepts a numpy array (complex/float) or a list of lists of exact
    numbers (Fraction/int); elimination is O(n^3) with row/column pivoting.
    pf([[0, a], [-a, 0]]) = a; pf of 4x4 is a12 a34 - a13 a24 + a14 a23.
    """
    if isinstance(matrix, np.ndarray):
        A = [list(row) for row in matrix]
    else:
        A = [list(row) for row in matrix]
    n = len(A)
    if n == 0:
        return 1
    if n % 2:
        raise OddSize(f"size {n} is odd")
    if check_skew:
        for i in range(n):
            for j in range(i, n):
                diff = A[i][j] + A[j][i]
                scale = max(_abs(A[i][j]), _abs(A[j][i]), 1)
                if isinstance(diff, Fraction) or isinstance(diff, int):
                    ok = diff == 0
                else:
                    ok = _abs(diff) <= tol * scale
                if not ok:
                    raise NotSkew(f"entry ({i},{j}) breaks skew-symmetry")
    try:
        _abs(A[0][1])
        magnitude = _abs
    except TypeError:
        magnitude = lambda x: 0 if x == 0 else 1  # exact field: any nonzero pivot
    result = 1
    sign = 1
    for k in range(0, n, 2):
        # pivot: largest |A[k][j]| for j > k
        piv = max(range(k + 1, n), key=lambda j: magnitude(A[k][j]))
        if magnitude(A[k][piv]) == 0:
            return 0 * A[0][1]
        if piv != k + 1:
            A[piv], A[k + 1] = A[k + 1], A[piv]
            for row in A:
                row[piv], row[k + 1] = row[k + 1], row[piv]
            sign = -sign
        a = A[k][k + 1]
        result = result * a
        for i in range(k + 2, n):
            for j in range(k + 2, n):
                A[i][j] = A[i][j] - (A[k][i] * A[k + 1][j] - A[k][j] * A[k + 1][i]) / a
    return sign * result


def det_fraction(matrix):
    """Exact determinant of a Fraction matrix by fraction-free Bareiss on
    integers (rows scaled by common denominators)."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in M:
        den = 1
        for x in row:
            x = Fraction(x)
            den = den * x.denominator // _gcd(den, x.denominator)
        scale /= den
        rows.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * scale * rows[n - 1][n - 1]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def det_field(matrix):
    """Determinant over any exact field (elements with +,-,*,/ and == 0),
    by Gaussian elimination with first-nonzero pivoting."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    det = None
    sign = 1
    for k in range(n):
        piv = None
        for r in range(k, n):
            if not (M[r][k] == 0):
                piv = r
                break
        if piv is None:
            return 0 * M[0][0]
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        det = M[k][k] if det is None else det * M[k][k]
        for i in range(k + 1, n):
            factor = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] = M[i][j] - factor * M[k][j]
    return det if sign > 0 else -det
