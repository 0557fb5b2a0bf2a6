"""Exact phases in Q/Z and collapsed character sums.

Every phase ``exp(2*pi*i*theta)`` that shows up in the invariants has a
rational ``theta``; we keep ``theta`` as a reduced fraction in ``[0, 1)``
and never touch floating point except in :func:`evaluate_phase_sum_numeric`,
which exists for cross-checking only.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "RationalAngle",
    "ZERO",
    "angle_from",
    "angle_add",
    "angle_scale",
    "angle_sum",
    "linear_character_sum",
    "bilinear_character_sum",
    "count_solutions_mod_k",
    "evaluate_phase_sum_numeric",
]


@dataclass(frozen=True, order=True)
class RationalAngle:
    """An element of Q/Z stored as ``numerator/denominator`` in ``[0, 1)``.

    Construction always canonicalizes, so structural equality is equality
    in Q/Z and instances are hashable.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator == 0:
            raise ValueError("denominator must be nonzero")
        num, den = self.numerator, self.denominator
        if den < 0:
            num, den = -num, -den
        num %= den
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalAngle":
        return cls(value.numerator, value.denominator)

    def __add__(self, other: "RationalAngle") -> "RationalAngle":
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return angle_add(self, other)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalAngle") -> "RationalAngle":
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return angle_add(self, -other)

    def __mul__(self, n: int) -> "RationalAngle":
        if not isinstance(n, int):
            return NotImplemented
        return angle_scale(n, self)

    __rmul__ = __mul__

    @property
    def order(self) -> int:
        """Order of the angle in Q/Z (equal to the reduced denominator)."""
        return self.denominator

    def is_zero(self) -> bool:
        return self.numerator == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def on_grid(self, k: int) -> int:
        """Return ``r`` with ``self == r/k``; fails if the order does not divide ``k``."""
        if k % self.denominator:
            raise ValueError(f"{self} is not a multiple of 1/{k}")
        return self.numerator * (k // self.denominator)

    def phase(self) -> complex:
        """Floating-point value of ``exp(2*pi*i*self)``."""
        return cmath.exp(2j * math.pi * self.numerator / self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ZERO = RationalAngle(0, 1)


def angle_from(a: int, k: int) -> RationalAngle:
    """Class of ``a/k`` in Q/Z."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return RationalAngle(a, k)


def angle_add(a: RationalAngle, b: RationalAngle) -> RationalAngle:
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    return RationalAngle(
        a.numerator * (den // a.denominator) + b.numerator * (den // b.denominator), den
    )


def angle_scale(n: int, a: RationalAngle) -> RationalAngle:
    return RationalAngle(n * a.numerator, a.denominator)


def angle_sum(angles: Iterable[RationalAngle]) -> RationalAngle:
    total = ZERO
    for a in angles:
        total = angle_add(total, a)
    return total


def linear_character_sum(coefficients: Sequence[int], k: int) -> int:
    """``sum_{y in (Z_k)^n} exp(2*pi*i*<c, y>/k)``, which is ``k^n`` or ``0``."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if all(c % k == 0 for c in coefficients):
        return k ** len(coefficients)
    return 0


def _half_images(columns, k, rows):
    counts = Counter()
    for u in itertools.product(range(k), repeat=len(columns)):
        image = [0] * rows
        for coeff, col in zip(u, columns):
            if coeff:
                for i, entry in enumerate(col):
                    image[i] += coeff * entry
        counts[tuple(x % k for x in image)] += 1
    return counts


def count_solutions_mod_k(B, k: int, target: Sequence[int] | None = None) -> int:
    """Count ``u in (Z_k)^n`` with ``B u = target (mod k)`` by enumeration.

    The columns are split in two halves and the partial images are matched
    (meet in the middle), so the cost is ``k^ceil(n/2)`` rather than ``k^n``.
    This deliberately avoids any Smith-form reasoning; it serves as the
    enumeration route that the closed forms are checked against.
    """
    from .intlinalg import as_matrix

    B = as_matrix(B)
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    m, n = B.rows, B.cols
    target = tuple(t % k for t in (target if target is not None else [0] * m))
    if len(target) != m:
        raise ValueError("target length must match the number of rows")
    columns = [B.col(j) for j in range(n)]
    half = n // 2
    left = _half_images(columns[:half], k, m)
    right = _half_images(columns[half:], k, m)
    total = 0
    for image, count in left.items():
        needed = tuple((t - x) % k for t, x in zip(target, image))
        total += count * right.get(needed, 0)
    return total


def bilinear_character_sum(B, k: int) -> int:
    """Exact value of ``sum_{p, u} exp(2*pi*i * p^T B u / k)``.

    ``p`` runs over ``(Z_k)^m`` and ``u`` over ``(Z_k)^n`` for an ``m x n``
    integer matrix ``B``. Summing over ``p`` first kills every ``u`` with
    ``B u != 0 (mod k)`` and contributes ``k^m`` otherwise.

    >>> bilinear_character_sum([[0, 1], [1, 0]], 5)
    25
    >>> bilinear_character_sum([[4]], 6)
    12
    """
    from .intlinalg import as_matrix

    B = as_matrix(B)
    return k ** B.rows * count_solutions_mod_k(B, k)


def evaluate_phase_sum_numeric(angles: Iterable[RationalAngle]) -> tuple[float, float]:
    """Floating-point ``sum exp(2*pi*i*theta)`` as ``(re, im)``. Test oracle only."""
    re_parts, im_parts = [], []
    for a in angles:
        t = 2 * math.pi * a.numerator / a.denominator
        re_parts.append(math.cos(t))
        im_parts.append(math.sin(t))
    return math.fsum(re_parts), math.fsum(im_parts)
