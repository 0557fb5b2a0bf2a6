"""Curated closed 3-manifolds with surgery and cellular presentations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .intlinalg import HomologySummary, IntegerMatrix
from .invariants import SurgeryPresentation
from .statesum import CellComplex

__all__ = [
    "CatalogEntry",
    "E8_MATRIX",
    "continued_fraction",
    "lens_space_chain",
    "lens_space",
    "catalog",
    "lookup",
]

# Cartan matrix of E8: plumbing on this tree (framing 2, adjacent components linking -1)
# gives the Poincare homology sphere up to orientation.
E8_MATRIX = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    surgery: SurgeryPresentation
    complex: CellComplex | None = None
    homology: HomologySummary | None = None
    expected: str = ""

    def expected_upsilon(self, k: int) -> int | None:
        if self.homology is None:
            return None
        return k**self.homology.betti1 * math.prod(math.gcd(k, p) for p in self.homology.torsion)


def continued_fraction(p: int, q: int) -> list[int]:
    """Coefficients ``a_i >= 2`` with ``p/q = a_1 - 1/(a_2 - 1/(...))``."""
    if not (0 < q < p and math.gcd(p, q) == 1):
        raise ValueError(f"need 0 < q < p coprime, got p={p}, q={q}")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def lens_space_chain(p: int, q: int) -> IntegerMatrix:
    """Linking matrix of the linear chain of unknots presenting ``L(p, q)``.

    Framings are the continued-fraction coefficients ``a_i`` and neighbouring
    components link ``-1``; the determinant is ``p``. This presents ``L(p, q)``
    up to orientation, which none of the abelian invariants can see.
    """
    coeffs = continued_fraction(p, q)
    n = len(coeffs)
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(coeffs):
        rows[i][i] = a
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return IntegerMatrix.from_rows(rows, n)


def _one_vertex_complex(rows, edges=None) -> CellComplex:
    return CellComplex.from_incidence(1, rows, edges=edges)


def _torsion(*orders) -> HomologySummary:
    return HomologySummary(0, tuple(p for p in orders if p > 1))


def lens_space(p: int, q: int = 1) -> CatalogEntry:
    if p == 1:
        surgery = SurgeryPresentation.from_matrix([[1]])
    elif q == 1:
        surgery = SurgeryPresentation.from_matrix([[p]])
    else:
        surgery = SurgeryPresentation(lens_space_chain(p, q))
    return CatalogEntry(
        name=f"L({p},{q})",
        surgery=surgery,
        complex=_one_vertex_complex([[p]]),
        homology=_torsion(p),
        expected=f"Upsilon = gcd(k,{p})",
    )


def catalog(lens_orders: Iterable[int] = range(2, 9)) -> list[CatalogEntry]:
    entries = [
        CatalogEntry(
            name="S3",
            surgery=SurgeryPresentation(IntegerMatrix.zeros(0, 0)),
            complex=_one_vertex_complex([], edges=0),
            homology=HomologySummary(0),
            expected="Upsilon = 1, tau = 1/k",
        ),
        CatalogEntry(
            name="S1xS2",
            surgery=SurgeryPresentation.from_matrix([[0]]),
            complex=_one_vertex_complex([[0]]),
            homology=HomologySummary(1),
            expected="Upsilon = k, tau = 1",
        ),
    ]
    entries += [lens_space(p) for p in lens_orders]
    entries += [lens_space(p, q) for p, q in ((5, 2), (7, 2), (8, 3), (12, 5))]
    entries += [
        CatalogEntry(
            # genus-2 Heegaard presentation <x, y | x^3 = y^5 = (xy)^2>
            name="Poincare",
            surgery=SurgeryPresentation.from_matrix(E8_MATRIX),
            complex=_one_vertex_complex([[1, -2], [-2, 3]]),
            homology=HomologySummary(0),
            expected="Upsilon = 1",
        ),
        CatalogEntry(
            # 0-framed Borromean rings
            name="T3",
            surgery=SurgeryPresentation(IntegerMatrix.zeros(3, 3)),
            complex=_one_vertex_complex([[0, 0, 0]] * 3),
            homology=HomologySummary(3),
            expected="Upsilon = k^3",
        ),
        CatalogEntry(
            name="S1xS2#L(3,1)",
            surgery=SurgeryPresentation.from_matrix([[0, 0], [0, 3]]),
            complex=_one_vertex_complex([[0, 0], [0, 3]]),
            homology=HomologySummary(1, (3,)),
            expected="Upsilon = k gcd(k,3)",
        ),
        CatalogEntry(
            name="L(2,1)#L(4,1)",
            surgery=SurgeryPresentation.from_matrix([[2, 0], [0, 4]]),
            complex=_one_vertex_complex([[2, 0], [0, 4]]),
            homology=HomologySummary(0, (2, 4)),
            expected="Upsilon = gcd(k,2) gcd(k,4)",
        ),
    ]
    return entries


def lookup(name: str) -> CatalogEntry:
    """Find an entry by name; ``L(p,q)`` names are built on demand."""
    for entry in catalog():
        if entry.name == name:
            return entry
    if name.startswith("L(") and name.endswith(")"):
        try:
            p, q = (int(x) for x in name[2:-1].split(","))
        except ValueError:
            pass
        else:
            return lens_space(p, q)
    raise KeyError(f"no catalog entry named {name!r}")
