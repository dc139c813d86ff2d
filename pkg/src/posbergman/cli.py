"""Command-line front end.

Exit codes: 0 success (or "yes"), 1 domain-negative answer, 2 input error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import os
import sys

from . import jsonio
from .bergman import coarse_cells, fine_cells
from .errors import CapacityError, InputError
from .initial import flag_of, in_positive_bergman_fan, matroid_mw
from .om import circuits_from_matrix, matroid_of_columns, validate_circuits
from .shapes import (
    TreeShape,
    hook_count,
    increasing_labelings,
    permutation_of_tree,
    shape_of_increasing,
    tree_of_permutation,
)
from .trees import covering_statistics, kn_oriented_matroid

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _read_json(source):
    """Load JSON from a path, ``-`` for stdin, or an inline JSON literal."""
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source
    if not text.strip():
        raise InputError(f"{source}: empty input")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: {exc}") from exc


def _weights(source):
    """A weight vector from a ``{"w": [...]}`` file/literal or a comma list."""
    if not os.path.exists(source) and not source.lstrip().startswith("{"):
        return tuple(jsonio.parse_rational(x.strip()) for x in source.split(","))
    return jsonio.weight_from_json(_read_json(source))


def _weight_or_flag(args, n):
    if (args.w is None) == (args.flag is None):
        raise InputError("give exactly one of --w and --flag")
    if args.w is not None:
        w = _weights(args.w)
        if len(w) != n:
            raise InputError(f"weight vector has length {len(w)}, expected {n}")
        return w
    return jsonio.flag_from_json(_read_json(args.flag), n)


def cmd_validate(args):
    n, sets = jsonio.signed_sets_from_json(_read_json(args.circuits))
    # files hold one representative per +/- pair
    closed = sets + [-c for c in sets]
    report = validate_circuits(closed, n=n, all_violations=args.all, strong=args.strong)
    out = {
        "passed": report.passed,
        "violations": [
            {"axiom": v.axiom, "witnesses": [str(w) for w in v.witnesses]}
            for v in report.violations
        ],
    }
    return out, EXIT_OK if report.passed else EXIT_NO


def cmd_mw(args):
    M = jsonio.circuits_from_json(_read_json(args.circuits))
    w = _weight_or_flag(args, M.n)
    return jsonio.circuits_to_json(matroid_mw(M, w)), EXIT_OK


def cmd_bergman(args):
    M = jsonio.circuits_from_json(_read_json(args.circuits))
    build = coarse_cells if args.coarse else fine_cells
    summary = build(M, positive=args.positive, check=not args.no_check, bound=args.bound)
    return jsonio.summary_to_json(summary), EXIT_OK


def _matroid_of_matrix(args):
    rows, n = jsonio.matrix_from_json(_read_json(args.matrix))
    build = matroid_of_columns if args.columns else circuits_from_matrix
    return build(rows, n=n, bound=args.bound)


def cmd_from_matrix(args):
    return jsonio.circuits_to_json(_matroid_of_matrix(args)), EXIT_OK


def cmd_member(args):
    M = _matroid_of_matrix(args)
    w = _weights(args.w)
    if len(w) != M.n:
        raise InputError(f"weight vector has length {len(w)}, expected {M.n}")
    member = in_positive_bergman_fan(M, w)
    out = {"member": member, "flag": jsonio.flag_to_json(flag_of(w))["chain"]}
    return out, EXIT_OK if member else EXIT_NO


def _parse_shape(text):
    try:
        root = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise InputError(f"cannot parse shape {text!r}") from exc
    return TreeShape(root)


def cmd_trees(args):
    if args.count is not None:
        n = args.count
        M, _ = kn_oriented_matroid(n)
        pos = fine_cells(M, positive=True, check=False, bound=args.bound)
        full = fine_cells(M, positive=False, check=False, bound=args.bound)
        return {"n": n, "positive": len(pos.maximal), "total": len(full.maximal)}, EXIT_OK
    if args.shape is not None:
        shape = _parse_shape(args.shape)
        return {
            "shape": str(shape),
            "hook_count": hook_count(shape),
            "increasing_labelings": len(increasing_labelings(shape)),
        }, EXIT_OK
    if args.bijection is not None:
        tree = tree_of_permutation(args.bijection)
        back = permutation_of_tree(tree)
        return {
            "permutation": list(back),
            "roundtrip": back == tuple(int(c) for c in args.bijection),
            "shape": str(shape_of_increasing(tree)),
            "tree": tree.to_json(),
        }, EXIT_OK
    if args.covering is not None:
        report = covering_statistics(args.covering)
        return {
            "n": report.n,
            "cells": report.total,
            "expected_cells": report.expected_total,
            "complexes_per_cell": sorted(set(report.counts)),
            "expected_per_cell": 2 ** (report.n - 1),
            "covered_by_first_fixed": report.covered_by_first_fixed,
            "first_fixed_permutations": math.factorial(report.n - 1),
        }, EXIT_OK
    raise InputError("trees needs one of --count, --shape, --bijection, --covering")


def build_parser():
    parser = argparse.ArgumentParser(prog="posbergman", description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=None,
                        help="lower the enumeration cap on the ground-set size")
    parser.add_argument("-o", "--output", default=None, help="write JSON here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the circuit axioms")
    p.add_argument("circuits")
    p.add_argument("--all", action="store_true", help="report every violation")
    p.add_argument("--strong", action="store_true", help="check the strong elimination axiom")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("mw", help="initial oriented matroid for a weight or flag")
    p.add_argument("circuits")
    p.add_argument("--w", default=None)
    p.add_argument("--flag", default=None)
    p.set_defaults(func=cmd_mw)

    p = sub.add_parser("bergman", help="fine/coarse cells of the (positive) Bergman complex")
    p.add_argument("circuits")
    p.add_argument("--positive", action="store_true")
    p.add_argument("--coarse", action="store_true")
    p.add_argument("--no-check", action="store_true")
    p.set_defaults(func=cmd_bergman)

    for name, func, text in (
        ("from-matrix", cmd_from_matrix, "signed circuits of a linear ideal's forms"),
        ("member", cmd_member, "positive tropical membership of a weight vector"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("matrix")
        p.add_argument("--columns", action="store_true",
                       help="use the oriented matroid of the column vectors instead")
        if name == "member":
            p.add_argument("--w", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("trees", help="K_n trees, hook counts, bijection, covering")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--count", type=int, metavar="N")
    g.add_argument("--shape", metavar="NESTED")
    g.add_argument("--bijection", metavar="PERM")
    g.add_argument("--covering", type=int, metavar="N")
    p.set_defaults(func=cmd_trees)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        out, code = args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = jsonio.dumps(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
