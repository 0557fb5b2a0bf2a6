"""Z_k Turaev-Viro state sums on cellular decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import bilinear_character_sum
from .intlinalg import IntegerMatrix, MatrixLike, kernel_count_mod_k

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "CellComplex",
    "Labeling",
    "face_sum",
    "tv_bruteforce",
    "tv_cocycle_count",
    "tv_standard",
    "reciprocity_middle",
    "subdivide_edge",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The labeling enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class CellComplex:
    """Cell counts and the signed face/edge incidence matrix.

    ``incidence[a][b]`` is the signed number of times edge ``b`` occurs in the
    boundary word of face ``a``. ``connected`` is asserted by whoever built
    the complex; it cannot be derived from this data.
    """

    vertices: int
    edges: int
    faces: int
    incidence: IntegerMatrix
    connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "incidence", as_matrix_shaped(self.incidence, self.faces, self.edges))
        if self.vertices < 1:
            raise ValueError("a cell complex needs at least one vertex")
        if self.edges < 0 or self.faces < 0:
            raise ValueError("cell counts must be nonnegative")

    @classmethod
    def from_incidence(cls, vertices: int, incidence: Sequence[Sequence[int]], edges: int | None = None, connected: bool = True):
        rows = [list(r) for r in incidence]
        if edges is None:
            edges = len(rows[0]) if rows else 0
        return cls(vertices, edges, len(rows), IntegerMatrix.from_rows(rows, edges), connected)

    def require_connected(self):
        if not self.connected:
            raise ValueError("state sums are only normalized for connected complexes")


def as_matrix_shaped(data: MatrixLike, rows: int, cols: int) -> IntegerMatrix:
    M = data if isinstance(data, IntegerMatrix) else IntegerMatrix.from_rows(data, cols)
    if M.shape != (rows, cols):
        raise ValueError(f"incidence matrix must be {rows}x{cols}, got {M.rows}x{M.cols}")
    return M


@dataclass(frozen=True)
class Labeling:
    """Assignment of a Z_k residue to every edge."""

    values: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        object.__setattr__(self, "values", tuple(v % self.k for v in self.values))


def face_sum(c: CellComplex, labeling: Labeling | Sequence[int], face: int, k: int) -> int:
    """Signed sum of the edge labels around ``face``, mod ``k``."""
    values = labeling.values if isinstance(labeling, Labeling) else tuple(labeling)
    if not 0 <= face < c.faces:
        raise IndexError(f"face {face} out of range for {c.faces} faces")
    if len(values) != c.edges:
        raise ValueError(f"labeling has {len(values)} entries, complex has {c.edges} edges")
    return sum(d * v for d, v in zip(c.incidence.row(face), values)) % k


def tv_bruteforce(c: CellComplex, k: int, budget: int = DEFAULT_BUDGET) -> Fraction:
    """``k^-(V-1)`` times the number of labelings that are flat on every face."""
    c.require_connected()
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    terms = k**c.edges
    if terms > budget:
        raise BudgetExceeded(
            f"{terms} labelings exceed the budget of {budget}; use tv_cocycle_count instead"
        )
    rows = [[(e, d) for e, d in enumerate(c.incidence.row(a)) if d] for a in range(c.faces)]
    flat = 0
    for labels in itertools.product(range(k), repeat=c.edges):
        if all(sum(d * labels[e] for e, d in row) % k == 0 for row in rows):
            flat += 1
    return Fraction(flat, k ** (c.vertices - 1))


def tv_cocycle_count(c: CellComplex, k: int) -> Fraction:
    """Closed form: flat labelings are the kernel of the incidence matrix mod k."""
    c.require_connected()
    return Fraction(kernel_count_mod_k(c.incidence, k), k ** (c.vertices - 1))


def tv_standard(c: CellComplex, k: int) -> Fraction:
    """The same count with the customary ``k^-V`` normalization."""
    return tv_cocycle_count(c, k) / k


def reciprocity_middle(c: CellComplex, k: int) -> Fraction:
    """``k^-(F+V-1) sum_{q, v} exp(2 pi i q^T D v / k)`` over faces and edges."""
    c.require_connected()
    return Fraction(bilinear_character_sum(c.incidence, k), k ** (c.faces + c.vertices - 1))


def subdivide_edge(c: CellComplex, edge: int) -> CellComplex:
    """Insert a vertex in the middle of ``edge``.

    The two halves inherit the orientation, so every face through the old
    edge now runs through both halves with the same sign.
    """
    if not 0 <= edge < c.edges:
        raise IndexError(f"edge {edge} out of range for {c.edges} edges")
    rows = [list(r) + [r[edge]] for r in c.incidence.entries]
    return CellComplex(
        vertices=c.vertices + 1,
        edges=c.edges + 1,
        faces=c.faces,
        incidence=IntegerMatrix.from_rows(rows, c.edges + 1),
        connected=c.connected,
    )
