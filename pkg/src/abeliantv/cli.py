"""Command line interface: ``abeliantv {catalog,compute,statesum,verify}``."""

from __future__ import annotations

import argparse
import sys

from . import serialization
from .catalog import catalog, lookup
from .intlinalg import homology_from_linking_matrix
from .invariants import verify_identities
from .serialization import InputError, to_jsonable
from .statesum import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    reciprocity_middle,
    tv_bruteforce,
    tv_cocycle_count,
)
from .verification import SCOPES, run

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def parse_k_range(text: str) -> list[int]:
    """``"5"`` -> ``[5]``; ``"2..4"`` -> ``[2, 3, 4]``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid k range {text!r}; use 'n' or 'a..b'") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid k range {text!r}; need 1 <= a <= b")
    return list(range(lo, hi + 1))



def _emit(args, payload, lines):
    if args.format == "json":
        print(serialization.dumps(payload))
    else:
        print("\n".join(lines))


def _load(args):
    if args.input and args.manifold:
        raise InputError("give either --input or --manifold, not both")
    if args.input:
        return serialization.load_input(args.input)
    if args.manifold:
        try:
            entry = lookup(args.manifold)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc)) from None
        return entry.surgery, entry.complex
    raise InputError("one of --input or --manifold is required")


def cmd_catalog(args) -> int:
    entries = catalog()
    payload = [
        {
            "name": e.name,
            "input": serialization.dump_input(e.surgery, e.complex),
            "homology": e.homology,
            "expected": e.expected,
        }
        for e in entries
    ]
    lines = [
        f"{e.name:14s} H1 = {str(e.homology):10s} {e.expected:30s} L = {e.surgery.linking.tolist()}"
        for e in entries
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_compute(args) -> int:
    surgery, complex_ = _load(args)
    if surgery is None:
        raise InputError("compute needs a 'linking_matrix'; use 'statesum' for complexes alone")
    reports = [
        verify_identities(surgery, complex_, k, seed=args.seed, budget=args.budget) for k in args.k
    ]
    payload = {"input": serialization.dump_input(surgery, complex_), "reports": reports}
    lines = [f"H1 = {homology_from_linking_matrix(surgery.linking)}"]
    for r in reports:
        line = (
            f"k={r.k} upsilon={r.upsilon} tau={r.tau} rt_center={r.rt_center} "
            f"z_bf={r.z_bf} surgery_expectation={r.surgery_expectation}"
        )
        if r.upsilon_link is not None:
            line += f" upsilon_link={r.upsilon_link} ratio={r.expectation_ratio}"
        for key, value in sorted(r.statesum.items()):
            line += f" {key}={value}"
        lines.append(line)
        for c in r.failures():
            lines.append(f"  FAIL {c.name}: {c.lhs!r} != {c.rhs!r}")
    _emit(args, payload, lines)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_statesum(args) -> int:
    _, complex_ = _load(args)
    if complex_ is None:
        raise InputError("statesum needs a cell complex")
    rows = []
    for k in args.k:
        brute = tv_bruteforce(complex_, k, args.budget)
        rows.append(
            {
                "k": k,
                "bruteforce": brute,
                "cocycle_count": tv_cocycle_count(complex_, k),
                "reciprocity_middle": reciprocity_middle(complex_, k),
                "tau": brute / k,
            }
        )
    lines = [
        f"k={r['k']} upsilon={r['bruteforce']} cocycle_count={r['cocycle_count']} "
        f"reciprocity_middle={r['reciprocity_middle']} tau={r['tau']}"
        for r in rows
    ]
    _emit(args, rows, lines)
    agree = all(r["bruteforce"] == r["cocycle_count"] == r["reciprocity_middle"] for r in rows)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    records = run(args.scope, args.k, seed=args.seed, budget=args.budget)
    failed = [r for r in records if not r.passed]
    payload = {
        "scope": args.scope,
        "k": [args.k[0], args.k[-1]],
        "checked": len(records),
        "failed": len(failed),
        "records": records if args.format == "json" else [],
    }
    lines = []
    groups: dict[tuple, list] = {}
    for r in records:
        groups.setdefault((r.group, r.name, r.k), []).append(r)
    for (group, name, k), recs in groups.items():
        bad = [r for r in recs if not r.passed]
        status = "FAIL" if bad else "PASS"
        lines.append(f"{status} {group} {name} k={k} ({len(recs)} checks)")
        for r in bad:
            lines.append(f"    {r.check}: {to_jsonable(r.lhs)} vs {to_jsonable(r.rhs)}")
    lines.append(f"{len(records) - len(failed)}/{len(records)} checks passed")
    _emit(args, payload, lines)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abeliantv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k_default):
        p.add_argument("--k", type=parse_k_range, default=parse_k_range(k_default), help="level n or range a..b")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max labelings to enumerate")
        p.add_argument("--seed", type=int, default=0, help="seed for random Kirby moves")

    def source(p):
        p.add_argument("--input", help="JSON file with a surgery presentation and/or cell complex")
        p.add_argument("--manifold", help="catalog entry name, e.g. 'L(7,2)'")

    p = sub.add_parser("catalog", help="list the built-in manifolds")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("compute", help="invariants of a surgery presentation")
    source(p)
    common(p, "2")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("statesum", help="state sums of a cell complex")
    source(p)
    common(p, "2")
    p.set_defaults(func=cmd_statesum)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--scope", choices=SCOPES, default="all")
    common(p, "1..12")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
