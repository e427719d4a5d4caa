"""Command line interface.

Exit codes: 0 success, 1 an invariant failed, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import report
from .cycle import build_cycle, classify_subgroup, isotropy_weight, pointwise_stabilizer
from .deformation import (
    Configuration,
    DegenerateConfiguration,
    assemble,
    closed_form_rep,
    cokernel_block_dimensions,
    dimension_audit,
    gamma_matrix,
    gamma_vectors,
)
from .exact import format_rational, rank
from .moduli import scan
from .verification import run_suite
from .weights import normalize_direction

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_direction(text: str):
    try:
        p, q = (int(t) for t in text.split(","))
        return normalize_direction(p, q)
    except ValueError as exc:
        raise UsageError(f"bad subgroup {text!r}: expected 'p,q' with (p,q) != (0,0)") from exc


def _config(args) -> Configuration:
    try:
        return Configuration.parse(args.n, args.a)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_rep(args) -> int:
    cfg = _config(args)
    rep = assemble(cfg)
    closed = closed_form_rep(cfg.n)
    match = rep == closed
    subgroups = list(scan(cfg.n).reports) if cfg.n >= 3 else []
    if args.format == "json":
        payload = report.report_dict(cfg.n, rep, subgroups)
        payload["a"] = [format_rational(x) for x in cfg.a]
        payload["closed_form_match"] = match
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(report.rep_csv(rep))
    else:
        print(f"n = {cfg.n}, a = ({', '.join(format_rational(x) for x in cfg.a)})")
        print(f"H^1(Theta_Y)      [{rep.rep1.dimension:>3}]  {report.format_rep_brace(rep.rep1)}")
        print(f"H^1(N_C0/Z)       [{rep.rep2.dimension:>3}]  {report.format_rep_brace(rep.rep2)}")
        print(f"H^1(N_C0bar/Z)    [{rep.rep3.dimension:>3}]  {report.format_rep_brace(rep.rep3)}")
        print(f"H^1(Theta_Z)      [{rep.total.dimension:>3}]  {report.format_rep_brace(rep.total)}")
        print(f"closed form: {'match' if match else 'MISMATCH'}")
    problems = rep.check()
    for p in problems:
        print(f"invariant failed: {p}", file=sys.stderr)
    return EXIT_OK if match and not problems else EXIT_INVARIANT


def cmd_alpha(args) -> int:
    cfg = _config(args)
    gammas = gamma_vectors(cfg)
    try:
        blocks = cokernel_block_dimensions(cfg)
        image_rank = sum(b[2] for b in blocks)
    except DegenerateConfiguration as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    ranks = None
    if args.samples:
        rng = random.Random(args.seed)
        ranks = [rank(gamma_matrix(Configuration.random(cfg.n, rng))) for _ in range(args.samples)]
    stable = ranks is None or set(ranks) == {5}
    if args.format == "json":
        payload = {
            "n": cfg.n,
            "a": [format_rational(x) for x in cfg.a],
            "gamma": {f"gamma{i + 1}": [format_rational(x) for x in g.coords] for i, g in enumerate(gammas)},
            "image_rank": image_rank,
            "cokernel": [{"block": name, "weight": str(w), "image_rank": r, "quotient_dim": d} for name, w, r, d in blocks],
        }
        if ranks is not None:
            payload["samples"] = {"count": len(ranks), "ranks": sorted(set(ranks)), "stable": stable}
        print(json.dumps(payload, indent=2))
    else:
        n = cfg.n
        headers = ["", *(f"nu_{i}" for i in range(1, n + 1)), *(f"u nu_{i}" for i in range(1, n + 1)),
                   *(f"u2 nu_{i}" for i in range(1, n + 1))]
        rows = [[f"gamma{i + 1}", *(format_rational(x) if x else "0" for x in g.coords)] for i, g in enumerate(gammas)]
        print(report.table(headers, rows))
        print(f"\nrank <gamma2..gamma6> = {image_rank}")
        print(report.table(["block", "weight", "image rank", "quotient dim"],
                           [[name, w, r, d] for name, w, r, d in blocks]))
        if ranks is not None:
            print(f"\n{len(ranks)} random configurations: ranks {sorted(set(ranks))} -> {'stable' if stable else 'UNSTABLE'}")
    return EXIT_OK if image_rank == 5 and stable else EXIT_INVARIANT


def cmd_audit(args) -> int:
    if args.n < 2:
        raise UsageError("n must be at least 2")
    checks = dimension_audit(args.n)
    if args.format == "json":
        print(json.dumps([{"name": c.name, "statement": c.statement, "computed": c.computed,
                           "expected": c.expected, "passed": c.passed} for c in checks], indent=2))
    else:
        print(report.table(["check", "computed", "expected", "result", "statement"],
                           [[c.name, c.computed, c.expected, "pass" if c.passed else "FAIL", c.statement]
                            for c in checks]))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_INVARIANT


def cmd_cycle(args) -> int:
    if args.n < 3:
        raise UsageError("the invariant cycle needs n >= 3")
    cycle = build_cycle(args.n)
    k = _parse_direction(args.subgroup) if args.subgroup else None
    rows = []
    for c in cycle.curves:
        entry = {
            "label": c.label,
            "coordinate_name": c.coordinate_name,
            "tangent_character": str(c.tangent_character),
            "stabilizer": str(pointwise_stabilizer(c)),
        }
        if k is not None:
            entry["isotropy_weight"] = isotropy_weight(c, k)
        rows.append(entry)
    cls = classify_subgroup(args.n, k, cycle) if k is not None else None
    if args.format == "json":
        payload = {"n": args.n, "curves": rows}
        if cls is not None:
            payload["subgroup"] = {"p": k.p, "q": k.q, "k_label": k.k_label(args.n),
                                   "semifree": cls.semifree, "lebrun": cls.is_lebrun,
                                   "max_isotropy": cls.max_isotropy, "witness": cls.witness}
        print(json.dumps(payload, indent=2))
    else:
        print(report.table(list(rows[0]), [list(r.values()) for r in rows]))
        if cls is not None:
            label = k.k_label(args.n) or "no K-label"
            print(f"\nsubgroup {k} ({label}): {cls.freeness.value}, {cls.lebrun.value}"
                  f" (max |isotropy| = {cls.max_isotropy}{', on ' + cls.witness if cls.witness else ''})")
    return EXIT_OK


def cmd_subgroups(args) -> int:
    if args.n < 3:
        raise UsageError("subgroup scan needs n >= 3")
    height = args.height if args.height is not None else args.n + 5
    if height < 1:
        raise UsageError("height must be at least 1")
    result = scan(args.n, height)
    if args.format == "json":
        print(json.dumps(report.report_dict(args.n, closed_form_rep(args.n), list(result.reports)), indent=2))
    elif args.format == "csv":
        sys.stdout.write(report.subgroups_csv(list(result.reports)))
    else:
        shown = result.reports if args.all else [r for r in result.reports if r.is_excess or r.k_label]
        print(report.table(
            report.SUBGROUP_FIELDS,
            [[r.as_dict()[f] for f in report.SUBGROUP_FIELDS] for r in shown],
        ))
        print(f"\ntorus-invariant dimension {result.torus_invariant_dim}; "
              f"{len(result.reports)} directions with height <= {height}; "
              f"excess: {', '.join(str(k) for k in result.excess_set) or 'none'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_from < 2 or args.n_to < args.n_from:
        raise UsageError("need 2 <= n-from <= n-to")
    checks = run_suite(args.n_from, args.n_to, args.samples, args.seed)
    passed = all(c.passed for c in checks)
    if args.format == "json":
        reports = [
            report.report_dict(n, closed_form_rep(n), list(scan(n).reports) if n >= 3 else [])
            for n in range(args.n_from, args.n_to + 1)
        ]
        print(json.dumps({"n_from": args.n_from, "n_to": args.n_to, "passed": passed,
                          "checks": [c.as_dict() for c in checks], "reports": reports}, indent=2))
    else:
        for c in checks:
            print(f"[{'PASS' if c.passed else 'FAIL'}] n={c.n:<3} {c.name}{'  ' + c.detail if c.detail else ''}")
        print(f"\n{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return EXIT_OK if passed else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistordef",
        description="Torus weights on H^1(Theta_Z) for LeBrun twistor spaces over nCP^2 and their equivariant deformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("rep", help="assembled representation on H^1(Theta_Z)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", help="comma-separated increasing positive rationals, e.g. 1/2,1,3 (default a_i = i)")
    fmt(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("alpha", help="gamma-vectors, image rank, per-weight cokernel")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a")
    p.add_argument("--samples", type=int, default=0, help="also check rank over K random configurations")
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("audit", help="dimension bookkeeping checklist")
    p.add_argument("--n", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("cycle", help="the 2n+4 invariant curves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subgroup", help="direction p,q: show isotropy weights and classification")
    fmt(p)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("subgroups", help="scan circles for excess fixed dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--height", type=int, help="max(|p|,|q|) bound (default n+5)")
    p.add_argument("--all", action="store_true", help="text format: list every direction, not just K_i and excess")
    fmt(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("verify", help="run the invariant suite over a range of n")
    p.add_argument("--n-from", type=int, default=3)
    p.add_argument("--n-to", type=int, default=12)
    p.add_argument("--samples", type=int, default=5, help="random configurations per n")
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateConfiguration as exc:
        print(f"invariant failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        # domain validation (n out of range, bad parameters)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
