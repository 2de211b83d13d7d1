"""Command-line front end.

Every command writes one JSON object per line on stdout (``--pretty`` gives an
aligned table instead).  Exit codes: 0 ok, 1 a verification suite failed,
2 usage or parse error, 3 domain error, 4 not realizable, 5 enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from . import qcalc, realize as rz, shape, suites, tree as trees
from .errors import BudgetExceeded, NotRealizable, PluckingError, TreeParseError

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_NOT_REALIZABLE, EXIT_BUDGET = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


def parse_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        vals = parse_ints(chunk)
        if len(vals) != 2:
            raise UsageError(f"binomial factor must be 'm,n', got {chunk!r}")
        pairs.append((vals[0], vals[1]))
    if not pairs:
        raise UsageError("no binomial factors given")
    return pairs


def emit(records: Iterable[dict], pretty: bool = False, out=None) -> None:
    out = out or sys.stdout
    records = list(records)
    if not pretty:
        for rec in records:
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    for rec in records:
        width = max((len(k) for k in rec), default=0)
        for k, v in rec.items():
            out.write(f"{k:<{width}}  {v if not isinstance(v, (dict, list)) else json.dumps(v)}\n")
        out.write("\n")


def _input_poly(args) -> tuple[dict, qcalc.Poly, list[tuple[int, int]] | None]:
    """Resolve the mutually exclusive input flags to (descriptor, polynomial, factors)."""
    if getattr(args, "tree", None):
        t = trees.parse_tree(args.tree)
        return {"tree": t.encoding, "edges": t.edges}, trees.pluck_product(t), None
    if getattr(args, "binom", None):
        pair = parse_pairs(args.binom)
        if len(pair) != 1:
            raise UsageError("--binom takes a single 'm,n'; use --binoms for products")
        return {"binoms": [list(pair[0])]}, qcalc.gauss(*pair[0]), pair
    if getattr(args, "binoms", None):
        pairs = parse_pairs(args.binoms)
        return {"binoms": [list(p) for p in pairs]}, rz.binomial_product(pairs), pairs
    if getattr(args, "qints", None):
        idx = parse_ints(args.qints)
        if any(a < 1 for a in idx):
            raise UsageError("q-integer indices must be >= 1")
        return {"qints": idx}, qcalc.poly_prod(qcalc.q_int(a) for a in idx), [(1, a - 1) for a in idx]
    if getattr(args, "coeffs", None):
        try:
            return {"coeffs": args.coeffs}, qcalc.from_csv(args.coeffs), None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("give one of --tree, --binom, --binoms, --qints" + (", --coeffs" if hasattr(args, "coeffs") else ""))


def _shape_record(p: qcalc.Poly) -> dict:
    rec: dict = {"coeffs": qcalc.to_csv(p), "degree": len(p) - 1}
    try:
        profile = shape.row_decompose(p)
        rec["rows"] = ",".join(map(str, profile.rows))
        rec["shape"] = shape.classify(p).as_record()
    except PluckingError as exc:
        rec["rows"] = None
        rec["shape"] = None
        rec["shape_error"] = str(exc)
    return rec


def _figures(p: qcalc.Poly, figdir: str, stem: str) -> list[str]:
    from . import plotting

    paths = [plotting.plot_coefficients(p, os.path.join(figdir, f"{stem}-coeffs.png"), title=stem)]
    try:
        paths.append(plotting.plot_rows(shape.row_decompose(p), os.path.join(figdir, f"{stem}-rows.png"), title=stem))
    except PluckingError:
        pass
    return paths


def cmd_compute(args) -> int:
    desc, p, _ = _input_poly(args)
    rec = {**desc, **_shape_record(p)}
    if args.figures:
        rec["figures"] = _figures(p, args.figures, "compute")
    emit([rec], args.pretty)
    return EXIT_OK


def cmd_classify(args) -> int:
    desc, p, factors = _input_poly(args)
    rec = {**desc, **_shape_record(p)}
    if factors is not None and len(shape.normalize_factors(factors)) >= 2:
        pred = shape.predict_product_shape(factors)
        rec["prediction"] = {
            "covered": pred.covered,
            "rule": pred.rule,
            "top_len": pred.top_len,
            "strictly_unimodal": pred.strictly_unimodal,
            "matches": pred.matches(shape.classify(p)) if rec["shape"] else None,
        }
    if args.figures:
        rec["figures"] = _figures(p, args.figures, "classify")
    emit([rec], args.pretty)
    return EXIT_OK


def cmd_realize(args) -> int:
    if args.qints:
        idx = parse_ints(args.qints)
        desc = {"qints": idx}
        build = lambda: rz.realize_qints(sorted(idx))  # noqa: E731
        target = qcalc.poly_prod(qcalc.q_int(a) for a in idx)
    elif args.binoms:
        pairs = parse_pairs(args.binoms)
        desc = {"binoms": [list(p) for p in pairs]}
        build = lambda: rz.realize(pairs)  # noqa: E731
        target = rz.binomial_product(pairs)
    else:
        raise UsageError("give --qints or --binoms")
    try:
        t = build()
    except NotRealizable as exc:
        emit([{**desc, "status": "NOT-REALIZABLE", "witness": exc.witness, "reason": str(exc)}], args.pretty)
        return EXIT_NOT_REALIZABLE
    q = trees.pluck_product(t)
    emit([{**desc, "status": "OK", "tree": t.encoding, "edges": t.edges,
           "coeffs": qcalc.to_csv(q), "verified": q == target}], args.pretty)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.from_catalog:
        entries = trees.read_catalog(args.from_catalog)
        edges = sorted({e.edges for e in entries})
    else:
        if args.edges is None:
            raise UsageError("give --edges or --from-catalog")
        entries = [trees.catalog_entry(t) for t in trees.enumerate_rooted_trees(args.edges)]
        edges = [args.edges]
        if args.catalog:
            trees.write_catalog(args.catalog, entries)
    groups = rz.collision_groups(entries)
    reduced = sum(1 for e in entries if trees.is_reduced(trees.parse_tree(e.canonical)))
    head = {
        "edges": edges,
        "trees": len(entries),
        "reduced_trees": reduced,
        "collision_groups": len(groups),
        "largest_group": max((len(g.members) for g in groups), default=1),
        "all_connected_by_exchange": all(g.connected for g in groups),
        "catalog": args.catalog,
    }
    emit([head] + [g.as_record() for g in groups], args.pretty)
    return EXIT_OK


def _run_suite(args) -> suites.Report:
    name = args.suite
    if name == "pak-panova":
        return suites.almost_strict_scan(args.max or 14)
    if name == "lemma31":
        return suites.three_row_shapes(args.max or 12)
    if name == "lemma34":
        return suites.four_row_shapes(args.max or 10)
    if name == "theorem41":
        return suites.two_factor_shapes(args.degree or 18)
    if name == "tree-invariants":
        return suites.tree_invariants(args.max if args.max is not None else 8, seed=args.seed)
    if name == "realizability":
        return suites.realizability(args.degree or 20)
    return suites.chain_suite(args.max or 12, min(args.max or 10, 10) if args.max else 10)


def cmd_verify(args) -> int:
    report = _run_suite(args)
    cases = report.cases if args.all else report.failures
    records = [{"suite": report.suite, **c.as_record()} for c in cases]
    summary = report.summary()
    if args.figures:
        from . import plotting

        figs = [plotting.plot_report(report, os.path.join(args.figures, f"{report.suite}.png"))]
        if report.suite == "pak-panova":
            pairs = sorted(p for p in shape.ALMOST_STRICT_EXCEPTIONS if p[1] <= (args.max or 14))
            figs.append(plotting.plot_gaussian_tops(pairs, os.path.join(args.figures, "pak-panova-tops.png")))
        summary["figures"] = figs
    emit(records + [summary], args.pretty)
    return EXIT_OK if report.passed else EXIT_FAILED


def _add_inputs(p: argparse.ArgumentParser, coeffs: bool = False) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tree", help='plane tree, e.g. "(()()((())))"')
    g.add_argument("--binom", help='one Gaussian binomial "m,n"')
    g.add_argument("--binoms", help='product of binomials "m,n;m,n;..."')
    g.add_argument("--qints", help='product of q-integers "a,b,..."')
    if coeffs:
        g.add_argument("--coeffs", help='coefficient list "c0,c1,..."')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="aligned text instead of JSON lines")
    parser = argparse.ArgumentParser(prog="plucking", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="coefficients, rows and shape of a polynomial")
    _add_inputs(p)
    p.add_argument("--figures", metavar="DIR", help="write coefficient and row plots here")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=[common], help="shape class, plus predicted shape for factor lists")
    _add_inputs(p, coeffs=True)
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", parents=[common], help="build a tree for a product of binomials or q-integers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--qints")
    g.add_argument("--binoms")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("enumerate", parents=[common], help="catalog rooted trees and find plucking collisions")
    p.add_argument("--edges", type=int)
    p.add_argument("--catalog", metavar="PATH", help="write the catalog (TAB-separated) here")
    p.add_argument("--from-catalog", metavar="PATH", help="analyse an existing catalog instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--max", type=int, help="largest n (or edge count for tree-invariants)")
    p.add_argument("--degree", type=int, help="size bound for two-factor products and realizability lists")
    p.add_argument("--seed", type=int, default=0, help="seed for random child shuffles")
    p.add_argument("--all", action="store_true", help="print passing cases too")
    p.add_argument("--figures", metavar="DIR")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.pretty = getattr(args, "pretty", False)
    try:
        return args.func(args)
    except (UsageError, TreeParseError) as exc:
        print(f"plucking: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotRealizable as exc:
        print(f"plucking: {exc}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except BudgetExceeded as exc:
        print(f"plucking: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PluckingError, ValueError) as exc:
        print(f"plucking: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
