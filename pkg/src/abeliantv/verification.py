"""Batteries of identity checks over the catalog and a range of levels."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable

from .catalog import CatalogEntry, catalog, lens_space
from .category import (
    base_modularity_check,
    center_modularity_check,
    quantum_dims,
    verify_center_axioms,
)
from .invariants import (
    ExternalLink,
    PhaseScalar,
    SurgeryPresentation,
    closed_invariants,
    apply_moves,
    expectation_ratio,
    random_kirby_sequence,
    verify_identities,
)
from .statesum import DEFAULT_BUDGET

__all__ = ["Record", "SCOPES", "verify_catalog", "verify_reciprocity", "verify_category", "verify_kirby", "run"]

SCOPES = ("all", "catalog", "reciprocity", "category", "kirby")


@dataclass
class Record:
    group: str
    name: str
    k: int
    check: str
    passed: bool
    lhs: Any = None
    rhs: Any = None

    @property
    def sort_key(self):
        return (SCOPES.index(self.group), self.name, self.k, self.check)


def _with_unlinked_knot(s: SurgeryPresentation) -> SurgeryPresentation:
    return SurgeryPresentation(s.linking, ExternalLink((0,) * s.m, 0))


def verify_catalog(entries: Iterable[CatalogEntry], ks: Iterable[int], seed: int = 0, budget: int = DEFAULT_BUDGET):
    out = []
    for entry in entries:
        for k in ks:
            report = verify_identities(
                _with_unlinked_knot(entry.surgery), entry.complex, k, seed=seed, budget=budget
            )
            for c in report.checks:
                out.append(Record("catalog", entry.name, k, c.name, c.passed, c.lhs, c.rhs))
            expected = entry.expected_upsilon(k)
            if expected is not None:
                out.append(Record("catalog", entry.name, k, "expected_upsilon", report.upsilon == expected, report.upsilon, expected))
            ratio = expectation_ratio(_with_unlinked_knot(entry.surgery), k)
            out.append(Record("catalog", entry.name, k, "unlinked_ratio_is_one", ratio == PhaseScalar(1), ratio, 1))
    return out


def verify_reciprocity(ps: Iterable[int], ks: Iterable[int], budget: int = DEFAULT_BUDGET):
    out = []
    for p in ps:
        entry = lens_space(p)
        for k in ks:
            report = verify_identities(entry.surgery, entry.complex, k, kirby_sequences=0, budget=budget)
            for c in report.checks:
                if c.name.startswith(("reciprocity", "tv_")):
                    out.append(Record("reciprocity", entry.name, k, c.name, c.passed, c.lhs, c.rhs))
    return out


def verify_category(ks: Iterable[int]):
    out = []
    for k in ks:
        name = f"Z({k})"
        for res in verify_center_axioms(k):
            out.append(Record("category", name, k, res.name, res.passed, res.counterexample, res.detail))
        out.append(Record("category", name, k, "center_modular", center_modularity_check(k), True, None))
        base = base_modularity_check(k)
        out.append(Record("category", name, k, "base_modular_iff_odd", base == (k % 2 == 1), base, k % 2 == 1))
        dims, D, delta = quantum_dims(k)
        ok = all(d == 1 for d in dims) and D == delta == k
        out.append(Record("category", name, k, "dimensions", ok, (D, delta), k))
    return out


def verify_kirby(entries: Iterable[CatalogEntry], ks: Iterable[int], seed: int = 0, sequences: int = 20, length: int = 4):
    out = []
    ks = list(ks)
    for entry in entries:
        rng = random.Random(f"{seed}:{entry.name}")
        batches = [random_kirby_sequence(entry.surgery.m, rng, length) for _ in range(sequences)]
        moved = [apply_moves(entry.surgery.linking, moves) for moves in batches]
        for k in ks:
            base = closed_invariants(entry.surgery.linking, k)
            bad = next(((b, m) for b, m in zip(batches, moved) if closed_invariants(m, k) != base), None)
            out.append(Record("kirby", entry.name, k, "invariants_unchanged", bad is None, base, bad))
    return out


def run(scope: str, ks: Iterable[int], seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[Record]:
    """All records of a verification run, ordered by (group, entry, k, check)."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {SCOPES}")
    ks = list(ks)
    records: list[Record] = []
    if scope in ("all", "catalog"):
        records += verify_catalog(catalog(), ks, seed, budget)
    if scope in ("all", "reciprocity"):
        records += verify_reciprocity(range(1, 9), ks, budget)
    if scope in ("all", "category"):
        records += verify_category(ks)
    if scope in ("all", "kirby"):
        records += verify_kirby(catalog(), ks, seed)
    return sorted(records, key=lambda r: r.sort_key)
