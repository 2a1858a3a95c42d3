"""Command line front end.

Every subcommand prints a single line of compact JSON on stdout (except
`gen`, whose output is the generated instance itself) so results can be
piped into other tooling.  Exit codes: 0 for a positive result, 1 for a
negative one (a certificate, a witness, a failed check), 2 for bad
input or usage, 3 for an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import decode_2cg, encode_2cg, validate_partition
from .obstruct import certificate_to_json, scan_obstructions, validate_certificate
from .oracle import (
    GeneratorWeights,
    SplitMix64,
    brute_force_partition,
    exhaustive_check,
    generate_random,
)
from .partition import partition
from .splitgraph import parse_dimacs, recognize_split, split_outcome_to_json
from .transversal import (
    InvariantViolation,
    parse_2iv,
    parse_subtree_json,
    pierce,
    pierce_subtrees,
)
from .triples import example1, find_clique_cover, find_same_color_triple_cover, max_mono_clique

__all__ = ["main"]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _point_json(point):
    """Exact JSON image of a piercing point.

    Integers and binary fractions stay numbers; anything else becomes a
    'p/q' string rather than a rounded float, since a nudged point could
    fall outside a closed interval it is supposed to pierce.
    """
    if point is None or not isinstance(point, Fraction):
        return point
    if point.denominator == 1:
        return int(point)
    if float(point) == point:
        return float(point)
    return str(point)


def _cmd_partition(args) -> int:
    g = decode_2cg(_read(args.input))
    order = list(range(g.n))
    if args.order == "shuffled":
        SplitMix64(args.seed).shuffle(order)
    outcome = partition(g, order=order)
    if args.validate:
        if outcome.is_partition:
            err = validate_partition(g, outcome.partition)
        else:
            err = validate_certificate(g, outcome.obstruction)
        if err is not None:
            print(f"internal invariant violated: {err}", file=sys.stderr)
            sys.stderr.write(encode_2cg(g))
            return 3
    if outcome.is_partition:
        _emit(
            {
                "status": "partition",
                "red": sorted(outcome.partition.red),
                "blue": sorted(outcome.partition.blue),
                "order": order,
            }
        )
        return 0
    doc = {"status": "certificate"}
    doc.update(certificate_to_json(outcome.obstruction))
    doc["order"] = order
    _emit(doc)
    return 1


def _cmd_scan(args) -> int:
    g = decode_2cg(_read(args.input))
    report = scan_obstructions(g)
    _emit(
        {
            "status": "ok" if report.obstruction_free else "obstructions",
            "obstruction_free": report.obstruction_free,
            "c4_red": [list(c.cycle) for c in report.c4_red],
            "c4_blue": [list(c.cycle) for c in report.c4_blue],
            "k5_star": [list(c.cycle) for c in report.k5],
        }
    )
    return 0 if report.obstruction_free else 1


def _cmd_split(args) -> int:
    g = parse_dimacs(_read(args.input))
    outcome = recognize_split(g)
    _emit(split_outcome_to_json(outcome))
    return 0 if outcome.is_split else 1


def _cmd_pierce(args) -> int:
    if args.subtrees is not None:
        tree_a, tree_b, members = parse_subtree_json(_read(args.subtrees))
        t = pierce_subtrees(tree_a, tree_b, members)
    else:
        t = pierce(parse_2iv(_read(args.input)))
    _emit(
        {
            "status": "transversal",
            "left_point": _point_json(t.left_point),
            "right_point": _point_json(t.right_point),
            "red": list(t.red),
            "blue": list(t.blue),
        }
    )
    return 0


def _cmd_gen(args) -> int:
    parts = [float(tok) for tok in args.weights.split(",")]
    if len(parts) != 3:
        raise ValueError("weights must be three comma separated numbers")
    total = sum(parts)
    if total <= 0 or min(parts) < 0:
        raise ValueError("weights must be nonnegative and not all zero")
    weights = GeneratorWeights(*(p / total for p in parts))
    g = generate_random(args.n, weights, args.seed)
    if args.output is None:
        sys.stdout.write(encode_2cg(g))
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(encode_2cg(g))
    return 0


def _cmd_oracle_partition(args) -> int:
    g = decode_2cg(_read(args.input))
    part = brute_force_partition(g)
    if part is None:
        _emit({"status": "none"})
        return 1
    _emit(
        {
            "status": "partition",
            "red": sorted(part.red),
            "blue": sorted(part.blue),
        }
    )
    return 0


def _cmd_oracle_exhaustive(args) -> int:
    report = exhaustive_check(args.n, allow_big=args.allow_big, jobs=args.jobs)
    ok = report.all_obstruction_free_partitioned
    doc = {"status": "ok" if ok else "failed"}
    doc.update(report.to_json())
    _emit(doc)
    return 0 if ok else 1


def _cover_json(tc):
    cover = find_clique_cover(tc)
    same = find_same_color_triple_cover(tc)
    return {
        "clique_cover": None if cover is None else [sorted(cover[0]), sorted(cover[1])],
        "same_color_triple_cover": None
        if same is None
        else {"t1": list(same[0]), "t2": list(same[1]), "color": same[2]},
    }


def _max_clique_json(tc):
    red_size, red_wit = max_mono_clique(tc, "red")
    blue_size, blue_wit = max_mono_clique(tc, "blue")
    return {
        "max_red": {"size": red_size, "vertices": list(red_wit)},
        "max_blue": {"size": blue_size, "vertices": list(blue_wit)},
    }


def _cmd_example1(args) -> int:
    tc = example1()
    if args.check_cover:
        doc = _cover_json(tc)
        _emit(doc)
        return 1 if doc["clique_cover"] is None else 0
    if args.check_max_clique:
        _emit(_max_clique_json(tc))
        return 0
    doc = _cover_json(tc)
    ok = doc["clique_cover"] is None and doc["same_color_triple_cover"] is not None
    full = {"status": "ok" if ok else "refuted"}
    full.update(doc)
    full.update(_max_clique_json(tc))
    _emit(full)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redblue",
        description="Partition 2-colored cliques or certify why not.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="partition a .2cg instance or emit a certificate")
    p.add_argument("-i", "--input", required=True, help=".2cg file, or - for stdin")
    p.add_argument(
        "--order",
        choices=("natural", "shuffled"),
        default="natural",
        help="insertion order (default natural)",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for --order shuffled")
    p.add_argument(
        "--validate",
        action="store_true",
        help="re-check the outcome with the independent validator",
    )
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("scan", help="list every canonical obstruction in a .2cg instance")
    p.add_argument("-i", "--input", required=True, help=".2cg file, or - for stdin")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("split", help="recognize a split graph from DIMACS input")
    p.add_argument("-i", "--input", required=True, help="DIMACS file, or - for stdin")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("pierce", help="pierce a 2-interval or 2-subtree family")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-i", "--input", help=".2iv file, or - for stdin")
    src.add_argument("--subtrees", metavar="FILE", help="subtree JSON file, or - for stdin")
    p.set_defaults(func=_cmd_pierce)

    p = sub.add_parser("gen", help="emit a seeded random .2cg instance")
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (default 0)")
    p.add_argument(
        "--weights",
        default="1,1,1",
        help="relative weights for red,blue,both (default 1,1,1)",
    )
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("example1", help="check the six-vertex triple coloring")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--check-cover",
        action="store_true",
        help="report only the two cover searches",
    )
    mode.add_argument(
        "--check-max-clique",
        action="store_true",
        help="report only the largest monochromatic cliques",
    )
    p.set_defaults(func=_cmd_example1)

    oracle = sub.add_parser("oracle", help="slow reference checks")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)

    p = osub.add_parser("partition", help="brute force a .2cg instance")
    p.add_argument("-i", "--input", required=True, help=".2cg file, or - for stdin")
    p.set_defaults(func=_cmd_oracle_partition)

    p = osub.add_parser("exhaustive", help="sweep every coloring of n vertices")
    p.add_argument("-n", type=int, required=True, help="vertex count")
    p.add_argument("--allow-big", action="store_true", help="permit the n=6 sweep")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=_cmd_oracle_exhaustive)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        if exc.instance_text:
            sys.stderr.write(exc.instance_text)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
