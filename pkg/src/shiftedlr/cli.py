"""Command-line front end.

Coefficient queries with selectable models, witness dumps in the text
rendering, the P-function Schur expansion, table generation, conjecture
sweeps, and the candidate search-tree dump.

Exit status: 0 success, 1 usage error, 2 counterexample found by verify.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import lr, pairs, rwshifted, shifted
from .shapes import (Shape, add_staircase, conjugate, format_partition,
                     is_strict, parse_partition, staircase)
from .tableaux import superstandard

USAGE_ERROR = 1
COUNTEREXAMPLE = 2


class CliError(Exception):
    pass


def _partition_arg(text: str, name: str, strict: bool = False):
    try:
        p = parse_partition(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if strict and not is_strict(p):
        raise CliError(f"{name} must be strictly decreasing: {text!r}")
    return p


def _default_jobs() -> int:
    env = os.environ.get("SHIFTEDLR_JOBS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _print_witnesses(tableaux, out):
    for i, t in enumerate(tableaux, start=1):
        print(f"--- witness {i}", file=out)
        print(t.render(), file=out)


def cmd_lr(args, out) -> int:
    lam = _partition_arg(args.lam, "lambda")
    mu = _partition_arg(args.mu, "mu")
    nu = _partition_arg(args.nu, "nu")
    if sum(lam) + sum(mu) != sum(nu):
        print(0, file=out)
        print("note: |lambda| + |mu| != |nu|; coefficient is 0",
              file=sys.stderr)
        return 0
    if args.model == "remmel-whitney":
        value = lr.lr_coefficient(lam, mu, nu)
    else:
        value = lr.lr_oracle(lam, mu, nu)
    print(value, file=out)
    if args.witnesses:
        _print_witnesses(lr.remmel_whitney_tableaux(Shape(nu, lam), mu), out)
    return 0


def cmd_f(args, out) -> int:
    lam = _partition_arg(args.lam, "lambda", strict=True)
    mu = _partition_arg(args.mu, "mu", strict=True)
    nu = _partition_arg(args.nu, "nu", strict=True)
    if sum(lam) + sum(mu) != sum(nu):
        print(0, file=out)
        print("note: |lambda| + |mu| != |nu|; coefficient is 0",
              file=sys.stderr)
        return 0
    if args.model == "stembridge":
        value = shifted.f_coefficient(lam, mu, nu)
    elif args.model == "standard":
        value = shifted.f_via_standard(lam, mu, nu)
    else:
        value = rwshifted.f_via_candidates(lam, mu, nu)
    print(value, file=out)
    if args.witnesses:
        if args.model == "new":
            wits = rwshifted.candidate_tableaux(Shape(nu, mu, shifted=True),
                                                lam)
        else:
            wits = shifted.stembridge_f_set(lam, mu, nu)
        _print_witnesses(wits, out)
    return 0


def cmd_g(args, out) -> int:
    lam = _partition_arg(args.lam, "lambda", strict=True)
    mu = _partition_arg(args.mu, "mu")
    if sum(lam) != sum(mu):
        print(0, file=out)
        print("note: |lambda| != |mu|; coefficient is 0", file=sys.stderr)
        return 0
    if args.model == "shape-mu":
        value = shifted.g_via_shape_tableaux(lam, mu)
    elif args.model == "new":
        value = rwshifted.g_via_candidates(lam, mu)
    else:
        value = pairs.g_via_pairs(lam, mu)
    print(value, file=out)
    if args.witnesses:
        if args.model == "pairs":
            for i, (a, u) in enumerate(pairs.paired_witnesses(lam, mu), 1):
                print(f"--- witness {i}", file=out)
                print(a.render(), file=out)
                print(u.render(), file=out)
        elif args.model == "new":
            delta = staircase(len(mu))
            shape = Shape(add_staircase(mu), delta, shifted=True)
            _print_witnesses(rwshifted.candidate_tableaux(shape, lam), out)
        else:
            wits = [t for t in _shape_mu_witnesses(lam, mu)]
            _print_witnesses(wits, out)
    return 0


def _shape_mu_witnesses(lam, mu):
    from .shifted import _marked_fillings
    from .tableaux import from_cells
    shape = Shape(mu)
    return [from_cells(shape, cells)
            for cells in _marked_fillings(shape, lam)]


def cmd_expand_p(args, out) -> int:
    lam = _partition_arg(args.lam, "lambda", strict=True)
    expansion = shifted.schur_p_expansion(lam)
    if args.format == "json":
        print(json.dumps(shifted.p_expansion_to_json(expansion), indent=2),
              file=out)
    else:
        for mu in sorted(expansion, reverse=True):
            print(f"{format_partition(mu)}\t{expansion[mu]}", file=out)
    return 0


def cmd_table(args, out) -> int:
    def progress(n, count):
        print(f"size {n}: {count} cells", file=sys.stderr)

    rows = pairs.generate_table(args.max_size,
                                only_g_gt_1=args.filter_g_gt_1,
                                jobs=args.jobs, progress=progress)
    text = (pairs.table_to_json(rows) if args.format == "json"
            else pairs.table_to_tsv(rows))
    out.write(text)
    return 0


def cmd_verify(args, out) -> int:
    def progress(n, count):
        print(f"size {n}: {count} cells", file=sys.stderr)

    if args.conjecture == "bij":
        report = pairs.sweep_bijection(args.max_size, jobs=args.jobs,
                                       progress=progress)
    else:
        report = pairs.sweep_inequality(args.max_size,
                                        square=args.conjecture == "g2-le-c",
                                        jobs=args.jobs, progress=progress)
    print(json.dumps(report, indent=2), file=out)
    return COUNTEREXAMPLE if report["violations"] else 0


def cmd_candidate_tree(args, out) -> int:
    nu = _partition_arg(args.nu, "nu", strict=True)
    mu = _partition_arg(args.mu, "mu", strict=True)
    shape_filter = (_partition_arg(args.shape, "shape")
                    if args.shape else None)
    members, root = rwshifted.candidate_search(Shape(nu, mu, shifted=True),
                                               shape_filter)
    if not args.full:
        root = rwshifted.prune_tree(root) or root
    if args.format == "json":
        print(json.dumps(root.to_json(), indent=2), file=out)
    else:
        print(root.render(), file=out)
        print(f"members: {len(members)}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftedlr",
        description="Littlewood-Richardson coefficients, classical and "
                    "shifted, with cross-checking tableau models")
    parser.add_argument("--out", help="write results to this file instead "
                                      "of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="classical LR coefficient")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--model", choices=["remmel-whitney", "oracle"],
                   default="remmel-whitney")
    p.add_argument("--witnesses", action="store_true")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("f", help="shifted LR coefficient")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--model", choices=["stembridge", "standard", "new"],
                   default="stembridge")
    p.add_argument("--witnesses", action="store_true")
    p.set_defaults(func=cmd_f)

    p = sub.add_parser("g", help="Schur expansion coefficient of the "
                                 "P function")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--model", choices=["shape-mu", "new", "pairs"],
                   default="pairs")
    p.add_argument("--witnesses", action="store_true")
    p.set_defaults(func=cmd_g)

    p = sub.add_parser("expand-p", help="Schur expansion of the P function")
    p.add_argument("lam")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_expand_p)

    p = sub.add_parser("table", help="g/c table over a sweep range")
    p.add_argument("--max-size", type=int, default=9)
    p.add_argument("--filter-g-gt-1", action="store_true")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="conjecture sweeps; exit 2 on any "
                                      "counterexample")
    p.add_argument("--conjecture", choices=["g-le-c", "g2-le-c", "bij"],
                   required=True)
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("candidate-tree",
                       help="dump the candidate search tree for a skew "
                            "shifted shape")
    p.add_argument("nu")
    p.add_argument("mu")
    p.add_argument("--shape", help="restrict to candidates of this shape")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--full", action="store_true",
                   help="keep branches with no surviving leaf")
    p.set_defaults(func=cmd_candidate_tree)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    out = sys.stdout
    handle = None
    if args.out:
        handle = open(args.out, "w")
        out = handle
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    finally:
        if handle is not None:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
