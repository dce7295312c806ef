"""Command-line front end: ``fkalg trees|reduce|hilbert|verify``.

Exit codes: 0 success, 1 verification failure or internal mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graph_core import Graph, GraphError, chromatic_polynomial, hilbert_from_chromatic
from .noncrossing import MAX_ENUM_N, enumerate_G_reduced, enumerate_noncrossing_trees, signature, trees_inside
from .orlik_terao import nbc_counts
from .reduction import TreeElement, reduce
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_json(_load_json(path))
    except (GraphError, ValueError, TypeError) as exc:
        raise InputError(f"bad graph in {path}: {exc}") from exc


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def cmd_trees(args) -> int:
    if args.graph is not None:
        g = _load_graph(args.graph)
    else:
        if not 1 <= args.n <= MAX_ENUM_N:
            raise InputError(f"--n must lie in 1..{MAX_ENUM_N}")
        g = Graph.complete(args.n)
    if g.n > MAX_ENUM_N:
        raise InputError(f"tree enumeration is limited to n <= {MAX_ENUM_N}")
    if args.reduced:
        trees = enumerate_G_reduced(g)
    elif args.graph is not None:
        trees = trees_inside(g)
    else:
        trees = enumerate_noncrossing_trees(g.n)
    for t in trees:
        row = {"edges": [list(e) for e in t.edges]}
        if args.signatures:
            row["signature"] = list(signature(t))
        _emit(row, args.pretty)
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.strategy == "random" and args.seed is None:
        raise InputError("--strategy random requires --seed")
    g = _load_graph(args.graph)
    try:
        e = TreeElement.from_json(_load_json(args.input))
        out = reduce(e, g, args.strategy, args.seed)
    except (GraphError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise InputError(f"bad element in {args.input}: {exc}") from exc
    _emit(out.to_json(), args.pretty)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    g = _load_graph(args.graph)
    if g.n > 10:
        raise InputError("NBC enumeration is limited to n <= 10")
    chi = chromatic_polynomial(g)
    try:
        via_chi = hilbert_from_chromatic(chi, g.n).int_coeffs()
    except ValueError as exc:
        print(f"error: chromatic route failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    counts = nbc_counts(g)
    _emit({"chromatic": chi.int_coeffs(), "hilbert": via_chi, "nbc_counts": counts}, args.pretty)
    if via_chi != counts:
        print("error: NBC counts disagree with the chromatic formula", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    try:
        checks = run_suite(args.suite, args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    for c in checks:
        _emit(c.to_json(), args.pretty)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fkalg", description="Noncrossing-tree bases and NBC bases for graph subalgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("trees", help="list noncrossing trees on [n] or inside a graph")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--graph", metavar="FILE")
    t.add_argument("--reduced", action="store_true", help="only G-reduced trees (G = K_n with --n)")
    t.add_argument("--signatures", action="store_true", help="include each tree's signature")
    t.add_argument("--pretty", action="store_true")
    t.set_defaults(func=cmd_trees)

    r = sub.add_parser("reduce", help="normal form of a tree element")
    r.add_argument("--graph", metavar="FILE", required=True)
    r.add_argument("--input", metavar="FILE", required=True)
    r.add_argument("--strategy", choices=("lex", "random"), default="lex")
    r.add_argument("--seed", type=int)
    r.add_argument("--pretty", action="store_true")
    r.set_defaults(func=cmd_reduce)

    h = sub.add_parser("hilbert", help="chromatic polynomial, Hilbert series and NBC counts")
    h.add_argument("--graph", metavar="FILE", required=True)
    h.add_argument("--pretty", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--pretty", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
