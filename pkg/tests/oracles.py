"""Independent reference computations for the tests.

Nothing here imports the code under test apart from plain data types.
"""

import cmath
import itertools
import math
from fractions import Fraction


def numeric_bilinear_sum(B, k, sign=1):
    """Floating-point sum of exp(sign * 2 pi i p^T B u / k) over all p, u."""
    m = len(B)
    n = len(B[0]) if m else 0
    total = 0j
    for p in itertools.product(range(k), repeat=m):
        for u in itertools.product(range(k), repeat=n):
            e = sum(p[i] * B[i][j] * u[j] for i in range(m) for j in range(n))
            total += cmath.exp(sign * 2j * math.pi * e / k)
    return total


def brute_kernel_count(B, k, cols=None):
    m = len(B)
    n = cols if cols is not None else (len(B[0]) if m else 0)
    return sum(
        1
        for u in itertools.product(range(k), repeat=n)
        if all(sum(B[i][j] * u[j] for j in range(n)) % k == 0 for i in range(m))
    )


def fraction_det(M):
    n = len(M)
    a = [[Fraction(x) for x in r] for r in M]
    det = Fraction(1)
    for t in range(n):
        piv = next((i for i in range(t, n) if a[i][t]), None)
        if piv is None:
            return Fraction(0)
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            det = -det
        det *= a[t][t]
        for i in range(t + 1, n):
            f = a[i][t] / a[t][t]
            a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    return det


def fraction_inverse(M):
    n = len(M)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for t in range(n):
        piv = next(i for i in range(t, n) if a[i][t])
        a[t], a[piv] = a[piv], a[t]
        a[t] = [x / a[t][t] for x in a[t]]
        for i in range(n):
            if i != t and a[i][t]:
                f = a[i][t]
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    return [r[n:] for r in a]


def invariant_factors_from_minors(M):
    """d_1 d_2 ... d_j = gcd of the j x j minors."""
    m = len(M)
    n = len(M[0]) if m else 0
    gcds = [1]
    for j in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), j):
            for cols in itertools.combinations(range(n), j):
                g = math.gcd(g, int(fraction_det([[M[r][c] for c in cols] for r in rows])))
        if g == 0:
            break
        gcds.append(g)
    factors = [gcds[j] // gcds[j - 1] for j in range(1, len(gcds))]
    return factors + [0] * (min(m, n) - len(factors))


def numeric_link_sum(L, lam, f, k):
    """k^-m sum_{p,u} exp(-2 pi i (p^T L u + p^T lam + lam^T u + f)/k)."""
    m = len(L)
    total = 0j
    for p in itertools.product(range(k), repeat=m):
        for u in itertools.product(range(k), repeat=m):
            e = sum(p[i] * L[i][j] * u[j] for i in range(m) for j in range(m))
            e += sum(a * b for a, b in zip(p, lam)) + sum(a * b for a, b in zip(lam, u)) + f
            total += cmath.exp(-2j * math.pi * e / k)
    return total / k**m
