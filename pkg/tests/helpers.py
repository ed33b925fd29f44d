"""Brute-force references that share no code with the package."""

import itertools
import math
from fractions import Fraction


def det_by_elimination(rows):
    """Determinant over the rationals by plain Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    assert det.denominator == 1
    return int(det)


def invariant_factors_by_minors(rows, ncols):
    """Nonzero invariant factors from determinantal divisors: s_k = D_k / D_{k-1},
    where D_k is the gcd of all k x k minors."""
    m = len(rows)
    factors = []
    prev = 1
    for k in range(1, min(m, ncols) + 1):
        dk = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(ncols), k):
                dk = math.gcd(dk, det_by_elimination([[rows[i][j] for j in ci] for i in ri]))
        if dk == 0:
            break
        factors.append(dk // prev)
        prev = dk
    return factors

