"""Integer linear algebra over Z and Z/k.

Matrices here are tiny (a handful of rows), so everything is plain Python
integers: arbitrary precision and no dependency on numpy's fixed-width types.
"""

from __future__ import annotations

import math
import operator
import warnings
from dataclasses import dataclass
from typing import Sequence, Union

from .exact_arith import RationalAngle, angle_from

__all__ = [
    "IntegerMatrix",
    "as_matrix",
    "determinant",
    "SmithDecomposition",
    "smith_normal_form",
    "kernel_count_mod_k",
    "HomologySummary",
    "homology_from_linking_matrix",
    "LinkingForm",
    "LinkingFormError",
    "linking_form",
    "BlowUp",
    "HandleSlide",
    "KirbyMove",
    "apply_kirby_move",
    "is_unimodular_congruent_step",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix. Zero-sized shapes are allowed (e.g. ``0 x 0``)."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match the shape {self.rows}x{self.cols}")
        for r in self.entries:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entries must be integers, got {x!r}")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(operator.index(x) for x in r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(data, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    T = property(transpose)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        other = as_matrix(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match the number of columns")
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def block_diagonal(self, other: "IntegerMatrix") -> "IntegerMatrix":
        other = as_matrix(other)
        data = [list(r) + [0] * other.cols for r in self.entries]
        data += [[0] * self.cols + list(r) for r in other.entries]
        return IntegerMatrix.from_rows(data, self.cols + other.cols)


MatrixLike = Union[IntegerMatrix, Sequence[Sequence[int]]]


def as_matrix(data: MatrixLike) -> IntegerMatrix:
    if isinstance(data, IntegerMatrix):
        return data
    return IntegerMatrix.from_rows(data)


def determinant(M: MatrixLike) -> int:
    """Determinant by fraction-free (Bareiss) elimination; ``det`` of ``0x0`` is 1."""
    M = as_matrix(M)
    if not M.is_square():
        raise ValueError("determinant needs a square matrix")
    n = M.rows
    a = M.tolist()
    sign, prev = 1, 1
    for t in range(n):
        pivot = next((i for i in range(t, n) if a[i][t] != 0), None)
        if pivot is None:
            return 0
        if pivot != t:
            a[t], a[pivot] = a[pivot], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * (a[n - 1][n - 1] if n else 1)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == diag(diag)`` with ``U`` and ``V`` unimodular.

    ``U_inv`` is the inverse of ``U``, tracked during the reduction so that
    torsion generators of the cokernel can be read off as its columns.
    ``diag`` has ``min(rows, cols)`` entries: positive invariant factors with
    ``d_i | d_{i+1}`` followed by zeros.
    """

    U: IntegerMatrix
    V: IntegerMatrix
    U_inv: IntegerMatrix
    diag: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def smith_normal_form(M: MatrixLike) -> SmithDecomposition:
    """Smith normal form by row/column reduction with a minimal pivot."""
    M = as_matrix(M)
    m, n = M.shape
    A = M.tolist()
    U = IntegerMatrix.identity(m).tolist()
    Ui = IntegerMatrix.identity(m).tolist()
    V = IntegerMatrix.identity(n).tolist()

    # Each row operation on A is mirrored on U (left) and, inverted, on the
    # columns of U_inv; column operations on A are mirrored on V.
    def add_row(src, dst, c):
        for mat in (A, U):
            mat[dst] = [x + c * y for x, y in zip(mat[dst], mat[src])]
        for r in Ui:
            r[src] -= c * r[dst]

    def swap_rows(i, j):
        for mat in (A, U):
            mat[i], mat[j] = mat[j], mat[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        for mat in (A, U):
            mat[i] = [-x for x in mat[i]]
        for r in Ui:
            r[i] = -r[i]

    def add_col(src, dst, c):
        for mat in (A, V):
            for r in mat:
                r[dst] += c * r[src]

    def swap_cols(i, j):
        for mat in (A, V):
            for r in mat:
                r[i], r[j] = r[j], r[i]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if not A[t][t]:
            break
        if A[t][t] < 0:
            negate_row(t)

    diag = tuple(A[i][i] for i in range(min(m, n)))
    return SmithDecomposition(
        U=IntegerMatrix.from_rows(U, m),
        V=IntegerMatrix.from_rows(V, n),
        U_inv=IntegerMatrix.from_rows(Ui, m),
        diag=diag,
    )


def kernel_count_mod_k(L: MatrixLike, k: int) -> int:
    """``|{u in (Z_k)^n : L u = 0 (mod k)}|`` from the invariant factors of ``L``."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    L = as_matrix(L)
    snf = smith_normal_form(L)
    count = k ** (L.cols - snf.rank)
    for d in snf.diag:
        if d:
            count *= math.gcd(k, d)
    return count


@dataclass(frozen=True)
class HomologySummary:
    """First Betti number and torsion coefficients ``p_1 | p_2 | ...`` (all >= 2)."""

    betti1: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.betti1 < 0:
            raise ValueError("betti1 must be nonnegative")
        if any(p < 2 for p in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def torsion_order(self) -> int:
        return math.prod(self.torsion)

    def __str__(self) -> str:
        parts = ["Z"] * self.betti1 + [f"Z/{p}" for p in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_from_linking_matrix(L: MatrixLike) -> HomologySummary:
    """``H_1`` of the surgered manifold, read off as the cokernel of ``L``."""
    L = as_matrix(L)
    if not L.is_square():
        raise ValueError("a linking matrix must be square")
    if not L.is_symmetric():
        warnings.warn("linking matrix is not symmetric; computing its cokernel anyway", stacklevel=2)
    snf = smith_normal_form(L)
    return HomologySummary(
        betti1=L.rows - snf.rank,
        torsion=tuple(d for d in snf.diag if d > 1),
    )


class LinkingFormError(ArithmeticError):
    """Raised when the Smith bookkeeping fails its consistency check."""


@dataclass(frozen=True)
class LinkingForm:
    """Gram matrix of the torsion linking form on cyclic generators.

    ``generators[i]`` is an integer vector representing a class of order
    ``generator_orders[i]`` in ``coker L``; ``gram[i][j]`` is ``Q(g_i, g_j)``.
    """

    generator_orders: tuple[int, ...]
    gram: tuple[tuple[RationalAngle, ...], ...]
    generators: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.generator_orders)

    def is_symmetric(self) -> bool:
        n = len(self)
        return all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(n))

    @property
    def order(self) -> int:
        return math.prod(self.generator_orders)


def linking_form(L: MatrixLike) -> LinkingForm:
    """Torsion linking form of the manifold obtained by surgery on ``L``.

    With ``U L V = D``, the class of ``U^{-1} e_i`` has order ``d_i`` and
    ``L (V e_i) = d_i U^{-1} e_i``, so ``Q(g_i, g_j) = (V e_i)^T (U^{-1} e_j) / d_i``.
    """
    L = as_matrix(L)
    if not L.is_symmetric():
        raise ValueError("the linking form needs a symmetric linking matrix")
    snf = smith_normal_form(L)
    idx = [i for i, d in enumerate(snf.diag) if d > 1]
    gens = [snf.U_inv.col(i) for i in idx]
    solves = [snf.V.col(i) for i in idx]
    for i, g, x in zip(idx, gens, solves):
        d = snf.diag[i]
        if L.apply(x) != tuple(d * c for c in g):
            raise LinkingFormError(f"L V e_{i} != {d} U^-1 e_{i}")
    gram = tuple(
        tuple(
            angle_from(sum(a * b for a, b in zip(x, g)), snf.diag[i])
            for g in gens
        )
        for i, x in zip(idx, solves)
    )
    return LinkingForm(
        generator_orders=tuple(snf.diag[i] for i in idx),
        gram=gram,
        generators=tuple(gens),
    )


@dataclass(frozen=True)
class BlowUp:
    """Add a split unknot with framing ``sign`` (+1 or -1)."""

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("blow-up sign must be +1 or -1")


@dataclass(frozen=True)
class HandleSlide:
    """Slide component ``target`` over component ``source``.

    On linking matrices this is the congruence ``L -> E^T L E`` where
    ``E = I + sign * e_{source,target}``.
    """

    source: int
    target: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("handle-slide sign must be +1 or -1")
        if self.source == self.target:
            raise ValueError("cannot slide a component over itself")


KirbyMove = Union[BlowUp, HandleSlide]


def apply_kirby_move(L: MatrixLike, move: KirbyMove) -> IntegerMatrix:
    L = as_matrix(L)
    if isinstance(move, BlowUp):
        return L.block_diagonal(IntegerMatrix.from_rows([[move.sign]]))
    if isinstance(move, HandleSlide):
        n = L.rows
        if not (0 <= move.source < n and 0 <= move.target < n):
            raise IndexError(f"handle slide {move} out of range for {n} components")
        E = IntegerMatrix.identity(n).tolist()
        E[move.source][move.target] = move.sign
        E = IntegerMatrix.from_rows(E, n)
        return E.T @ L @ E
    raise TypeError(f"unknown Kirby move {move!r}")


is_unimodular_congruent_step = apply_kirby_move
