"""Command-line frontend.

Exit codes: 0 success / property holds, 1 property fails (no hitting set, a
counterexample, no witness), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import generators, hypergraph, kernel, pseudo, solver
from .colorcoding import coloring_family
from .hypergraph import Hypergraph, ParseError


def _load(path: str) -> Hypergraph:
    try:
        return hypergraph.load(path)
    except (OSError, ParseError) as exc:
        raise SystemExit(_fail(str(exc)))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_kernelize(args) -> int:
    h = _load(args.file)
    report = kernel.kernelize(h, args.k, args.algo, size_guard=args.size_guard)
    print(f"algorithm: {report.algorithm}")
    print(f"rounds: {report.rounds}")
    print(f"work: {report.work}")
    print(f"edges_in: {len(h.edges)}")
    print(f"edges_out: {len(report.kernel.edges)}")
    print(f"bound: {report.bound}")
    if args.emit_chain:
        chain = (
            kernel.cores_chain(h, args.k)
            if report.algorithm == "cores"
            else kernel.pseudo_chain(h, args.k)
            if report.algorithm == "pseudo"
            else None
        )
        if chain is not None:
            for i, layer in enumerate(chain.layers):
                print(f"# chain layer {i}")
                sys.stdout.write(hypergraph.serialize(layer, shrink=args.shrink))
    print("# kernel")
    sys.stdout.write(hypergraph.serialize(report.kernel, shrink=args.shrink))
    return 0


def _cmd_solve(args) -> int:
    h = _load(args.file)
    answer = solver.min_hitting_set(h, args.k)
    if answer.exists:
        witness = " ".join(h.display_name(v) for v in sorted(answer.witness))
        print(f"hitting set exists: yes")
        print(f"witness: {witness}" if witness else "witness: (empty set)")
        return 0
    print("hitting set exists: no")
    return 1


def _cmd_verify(args) -> int:
    original = _load(args.original)
    candidate = _load(args.kernel)
    try:
        aligned = candidate.aligned_with(original)
    except ValueError as exc:
        return _fail(str(exc))
    outcome = solver.same_size_k_hitting_sets(original, aligned, args.k)
    if outcome is True:
        print(f"same size-{args.k} hitting sets: yes")
        return 0
    shown = " ".join(original.display_name(v) for v in sorted(outcome)) or "(empty set)"
    print(f"same size-{args.k} hitting sets: no")
    print(f"counterexample: {shown}")
    return 1


def _cmd_gen(args) -> int:
    if args.kind == "fig1":
        h = generators.gen_fig1()
    elif args.kind == "tree":
        h = generators.gen_tree(args.l, args.d)
    elif args.kind == "random":
        h = generators.gen_random(args.n, args.m, args.dmax, args.seed)
    else:
        family = coloring_family(args.n, args.k, args.c)
        for table in family:
            print(" ".join(str(color) for color in table))
        return 0
    sys.stdout.write(hypergraph.serialize(h))
    return 0


def _cmd_pseudo_test(args) -> int:
    h = _load(args.file)
    lookup = {h.display_name(v): v for v in range(h.vertex_count)}
    try:
        core = [lookup[tok] for tok in args.core]
    except KeyError as exc:
        return _fail(f"unknown vertex name {exc.args[0]!r}")
    witness = pseudo.find_pseudo_sunflower(h, core, args.k, args.level)
    if witness is None:
        print("no pseudo-sunflower with this core")
        return 1
    for leaf in witness.tree.leaves:
        row = witness.row(leaf)
        cells = [
            "{" + ",".join(sorted(h.display_name(v) for v in part)) + "}" for part in row
        ]
        leaf_label = "(" + ",".join(str(child) for child in leaf) + ")"
        print(f"leaf {leaf_label}: " + " | ".join(cells))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hskernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="compute a hitting-set kernel")
    p.add_argument("--algo", choices=kernel.ALGORITHMS, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-chain", action="store_true")
    p.add_argument("--shrink", action="store_true", help="drop unused vertices on output")
    p.add_argument("--size-guard", action="store_true",
                   help="return instances already within the size bound unchanged")
    p.add_argument("file")
    p.set_defaults(func=_cmd_kernelize)

    p = sub.add_parser("solve", help="brute-force size-k hitting set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check two instances have the same size-k hitting sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("original")
    p.add_argument("kernel")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a generated instance")
    gensub = p.add_subparsers(dest="kind", required=True)
    g = gensub.add_parser("fig1")
    g.set_defaults(func=_cmd_gen)
    g = gensub.add_parser("tree")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.set_defaults(func=_cmd_gen)
    g = gensub.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--dmax", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.set_defaults(func=_cmd_gen)
    g = gensub.add_parser("family")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--c", type=int, required=True)
    g.set_defaults(func=_cmd_gen)

    p = sub.add_parser("pseudo-test", help="print a pseudo-sunflower witness table")
    p.add_argument("--core", nargs="*", default=[], metavar="TOKEN")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_pseudo_test)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except ValueError as exc:
        return _fail(str(exc))
