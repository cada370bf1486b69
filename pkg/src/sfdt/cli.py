"""Command-line front door.

Exit codes: 0 success (or decision "yes"), 1 decision "no" (exhausted,
non-constructible, failed check, counterexamples found), 2 usage error,
3 input format error, 4 search aborted by a node or time limit.
Results are printed as JSON with sorted keys, so identical inputs and seeds
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .constructible import is_constructible
from .cover import (
    ValueMap,
    circular_ladder_cover,
    cover_from_json,
    cover_to_json,
    id_cover,
    mobius_ladder_cover,
    tilde_complete_cover,
)
from .degeneracy import f_removing_order
from .graph import make_graph, parse_edge_list
from .harness import VERIFIERS, InstanceFamily
from .reductions import (
    PartitionSpec,
    encode_dp,
    encode_forested,
    encode_list_coloring,
    encode_partition,
    encode_signed,
    parse_list_assignment,
    parse_signed_edge_list,
)
from .solver import ABORTED, find_sfdt, find_sfdt_bounded, find_sfdt_strictly_bounded

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_ABORTED = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_instance(path: str):
    return cover_from_json(json.loads(_read_text(path)))


def _emit(obj: dict, output: str | None = None) -> None:
    text = json.dumps(obj, sort_keys=True) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _witness_json(witness) -> list:
    return [[v, q] for v, q in enumerate(witness.picks)]


def _cmd_solve(args) -> int:
    c, f = _load_instance(args.instance)
    res = find_sfdt(c, f, max_nodes=args.max_nodes, timeout_s=args.timeout_s)
    out = {"status": res.status, "nodes": res.nodes_expanded}
    if res.witness is not None:
        out["witness"] = _witness_json(res.witness)
    _emit(out, args.output)
    if res.status == ABORTED:
        return EXIT_ABORTED
    return EXIT_OK if res.found() else EXIT_NO


def _cmd_solve_bounded(args) -> int:
    c, f = _load_instance(args.instance)
    solve = find_sfdt_strictly_bounded if args.strict else find_sfdt_bounded
    try:
        res = solve(c, f, max_nodes=args.max_nodes, timeout_s=args.timeout_s)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    out = {"status": res.status, "nodes": res.nodes_expanded, "bounded": res.bounded}
    if res.witness is not None:
        out["witness"] = _witness_json(res.witness)
    if res.descent_defs:
        out["descent"] = list(res.descent_defs)
    _emit(out, args.output)
    if res.status == ABORTED:
        return EXIT_ABORTED
    return EXIT_OK if res.found() else EXIT_NO


def _cmd_recognize(args) -> int:
    c, f = _load_instance(args.instance)
    tree = is_constructible(c, f)
    if tree is None:
        _emit({"status": "non-constructible"}, args.output)
        return EXIT_NO
    _emit({"status": "constructible", "tree": tree.to_json()}, args.output)
    return EXIT_OK


def _cmd_check_degenerate(args) -> int:
    obj = json.loads(_read_text(args.graph))
    try:
        g = make_graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
        fvals = [int(x) for x in obj["f"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"expected keys n, edges, f: {exc}") from exc
    if len(fvals) != g.n:
        raise ValueError(f"need {g.n} values, got {len(fvals)}")
    adj = {v: g.neighbors(v) for v in range(g.n)}
    order = f_removing_order(adj, dict(enumerate(fvals)))
    if order is None:
        _emit({"status": "not-strictly-f-degenerate"}, args.output)
        return EXIT_NO
    _emit({"status": "strictly-f-degenerate", "order": order}, args.output)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    if args.problem == "list":
        g = parse_edge_list(_read_text(args.graph))
        L = parse_list_assignment(_read_text(args.lists), g.n)
        c, f = encode_list_coloring(g, L)
    elif args.problem == "forested":
        g = parse_edge_list(_read_text(args.graph))
        L = parse_list_assignment(_read_text(args.lists), g.n)
        c, f = encode_forested(g, L)
    elif args.problem == "signed":
        sg = parse_signed_edge_list(_read_text(args.graph))
        c, f = encode_signed(sg, args.colors)
    elif args.problem == "partition":
        g = parse_edge_list(_read_text(args.graph))
        classes = json.loads(_read_text(args.spec))
        spec = PartitionSpec(tuple(tuple(int(x) for x in row) for row in classes))
        if any(len(row) != g.n for row in spec.classes):
            raise ValueError(f"each class row needs {g.n} entries")
        c, f = encode_partition(g, spec)
    elif args.problem == "dp":
        c, f = _load_instance(args.instance)
        f = encode_dp(c, f, args.threshold)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown reduction {args.problem!r}")
    _emit(cover_to_json(c, f), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    fam = InstanceFamily(
        bases=tuple(args.bases) if args.bases else (),
        random_bases=args.random_bases,
        min_n=args.min_n,
        max_n=args.max_n,
        kappas=tuple(args.kappa),
        matching_policy=args.policy,
        covers_per_base=args.covers,
        f_policy=args.f_policy,
        f_cap=args.f_cap,
        f_samples=args.f_samples,
        seed=args.seed,
    )
    report = VERIFIERS[args.theorem](fam)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.ok() else EXIT_NO


def _cmd_gen(args) -> int:
    if args.kind == "ladder":
        c = circular_ladder_cover(args.n)
        f = ValueMap.constant(args.n, 2, args.value)
    elif args.kind == "mobius":
        c = mobius_ladder_cover(args.n)
        f = ValueMap.constant(args.n, 2, args.value)
    elif args.kind == "tilde":
        c = tilde_complete_cover(args.p, args.kappa)
        constants = (
            [int(x) for x in args.constants.split(",")]
            if args.constants
            else [1] * args.kappa
        )
        if len(constants) != args.kappa:
            raise ValueError(f"need {args.kappa} constants, got {len(constants)}")
        f = ValueMap.from_rows([constants] * args.p)
    elif args.kind == "id":
        g = parse_edge_list(_read_text(args.graph))
        c = id_cover(g, args.kappa)
        f = ValueMap.constant(g.n, args.kappa, args.value)
    else:  # pragma: no cover
        raise ValueError(f"unknown generator {args.kind!r}")
    _emit(cover_to_json(c, f), args.output)
    return EXIT_OK


def _default_seed() -> int:
    env = os.environ.get("SFDT_SEED")
    return int(env) if env else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfdt",
        description="Strictly f-degenerate transversals of valued covers: "
        "exact solving, structure recognition, reductions, and property sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limits(p):
        p.add_argument("--max-nodes", type=int, default=None, help="abort after this many search nodes")
        p.add_argument("--timeout-s", type=float, default=None, help="abort after this many seconds")

    def add_output(p):
        p.add_argument("--output", default=None, help="write the JSON result to a file")

    p = sub.add_parser("solve", help="search an instance file for a witness")
    p.add_argument("instance", help="instance JSON ('-' for stdin)")
    add_limits(p)
    add_output(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("solve-bounded", help="search for a degree-capped witness")
    p.add_argument("instance")
    p.add_argument("--strict", action="store_true", help="require strict degree caps (needs strict value sums)")
    add_limits(p)
    add_output(p)
    p.set_defaults(func=_cmd_solve_bounded)

    p = sub.add_parser("recognize", help="decide constructibility and emit a witness tree")
    p.add_argument("instance")
    add_output(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("check-degenerate", help="strict f-degeneracy of a labeled graph")
    p.add_argument("graph", help="JSON with keys n, edges, f ('-' for stdin)")
    add_output(p)
    p.set_defaults(func=_cmd_check_degenerate)

    p = sub.add_parser("reduce", help="encode a coloring problem as an instance")
    psub = p.add_subparsers(dest="problem", required=True)
    for name in ("list", "forested"):
        q = psub.add_parser(name, help=f"{name} coloring from a graph and per-vertex lists")
        q.add_argument("--graph", required=True, help="edge-list file")
        q.add_argument("--lists", required=True, help="list-assignment file ('v: c1 c2 ...')")
        add_output(q)
        q.set_defaults(func=_cmd_reduce)
    q = psub.add_parser("signed", help="signed coloring from a signed edge list")
    q.add_argument("--graph", required=True, help="edge-list file with 'u v sign' lines")
    q.add_argument("--colors", type=int, required=True)
    add_output(q)
    q.set_defaults(func=_cmd_reduce)
    q = psub.add_parser("partition", help="variable-degeneracy partition instance")
    q.add_argument("--graph", required=True)
    q.add_argument("--spec", required=True, help="JSON: one value row per class")
    add_output(q)
    q.set_defaults(func=_cmd_reduce)
    q = psub.add_parser("dp", help="validate a 0/1-valued instance against a threshold")
    q.add_argument("--instance", required=True)
    q.add_argument("--threshold", type=int, required=True)
    add_output(q)
    q.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="run a property sweep over an instance family")
    p.add_argument("theorem", choices=sorted(VERIFIERS))
    p.add_argument("--bases", nargs="*", default=None, help="named bases, e.g. C5 K4 bowtie")
    p.add_argument("--random-bases", type=int, default=0)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--kappa", type=int, nargs="+", default=[2])
    p.add_argument("--policy", choices=["all", "perfect", "sampled"], default="perfect")
    p.add_argument("--covers", type=int, default=None, help="covers per base for the sampled policy")
    p.add_argument("--f-policy", default="degree-equal",
                   choices=["degree-equal", "degree-ge", "strict", "col-ge", "bounded"])
    p.add_argument("--f-cap", type=int, default=3)
    p.add_argument("--f-samples", type=int, default=None,
                   help="value maps per cover; omit for exhaustive degree-equal")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help="defaults to SFDT_SEED or 0")
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a named instance")
    gsub = p.add_subparsers(dest="kind", required=True)
    q = gsub.add_parser("ladder", help="two-layer identity cover of a cycle")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--value", type=int, default=1)
    add_output(q)
    q.set_defaults(func=_cmd_gen)
    q = gsub.add_parser("mobius", help="two-layer cycle cover with one swapped edge")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--value", type=int, default=1)
    add_output(q)
    q.set_defaults(func=_cmd_gen)
    q = gsub.add_parser("tilde", help="stacked copies of a complete graph")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--kappa", type=int, default=2)
    q.add_argument("--constants", default=None, help="comma-separated value per copy")
    add_output(q)
    q.set_defaults(func=_cmd_gen)
    q = gsub.add_parser("id", help="identity cover of a graph file")
    q.add_argument("--graph", required=True)
    q.add_argument("--kappa", type=int, required=True)
    q.add_argument("--value", type=int, default=1)
    add_output(q)
    q.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
