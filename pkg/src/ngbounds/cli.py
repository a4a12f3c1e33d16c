"""Command-line entry point.

Subcommands
-----------
count     exact counts and the sum/product quantities of a graph or coloring
compress  pivot trace and final threshold code of a graph
bounds    analytic bound table for given t, n (and optionally r colors)
verify    run a named verification suite (exit 1 on any violation)
extremal  exhaustive labeled scan for one quantity, CSV record output;
          --shards K --shard k processes only masks congruent to k mod K
exponent  advisory CSV of the product exponent on random graphs

Exit codes: 0 success, 1 property violation, 2 input error.
Inputs: graph6 strings (short form) and the coloring text format
(header ``n r``, one ``u v c`` line per colored edge, colors 1-based).
All randomized commands are reproducible from --seed.
"""

from __future__ import annotations

import argparse
import sys
from math import comb

from .compression import compress_to_threshold
from .counting import clique_profile, count_cliques, independent_profile
from .graphs import Graph6Error, parse_graph6
from .multicolor import (
    ColoringFormatError,
    certificate_length,
    certificate_lower_bound,
    multicolor_upper_bound,
    parse_coloring,
    pigeonhole_sequence,
)
from .oracle import exhaustive_coloring_extremal, exhaustive_extremal, random_pi_exponent
from .packing import leading_term_bound
from .threshold import extremal_one_turn_codes, recognize
from .verify import SUITES


def _load_graph(args):
    if getattr(args, "graph6", None) is not None:
        return parse_graph6(args.graph6.strip())
    with open(args.graph6_file, encoding="ascii") as fh:
        return parse_graph6(fh.read().strip())


def cmd_count(args) -> int:
    sizes = sorted(set(args.t or []))
    if args.coloring is not None:
        with open(args.coloring, encoding="ascii") as fh:
            fam = parse_coloring(fh.read())
        print(f"n {fam.n}")
        print(f"r {fam.r}")
        print(f"total {'yes' if fam.covers_all_edges else 'no'}")
        counts = [count_cliques(g) for g in fam.members]
        for idx, c in enumerate(counts, start=1):
            print(f"k(G_{idx}) {c}")
        print(f"sum {sum(counts)}")
        prod_val = 1
        for c in counts:
            prod_val *= c
        print(f"product {prod_val}")
        return 0
    g = _load_graph(args)
    kp = clique_profile(g)
    ip = independent_profile(g)
    print(f"n {g.n}")
    print(f"k {kp.total}")
    print(f"i {ip.total}")
    print(f"sigma {kp.total + ip.total}")
    print(f"pi {kp.total * ip.total}")
    for t in sizes:
        if not 0 <= t <= g.n:
            raise ValueError(f"size t={t} outside [0, {g.n}]")
        kt, it = kp.count(t), ip.count(t)
        print(f"k_{t} {kt}")
        print(f"i_{t} {it}")
        print(f"sigma_{t} {kt + it}")
        print(f"pi_{t} {kt * it}")
    return 0


def cmd_compress(args) -> int:
    g = _load_graph(args)
    kp, ip = clique_profile(g), independent_profile(g)
    final, pivots = compress_to_threshold(g)
    for x, y in pivots:
        print(f"compress {x} -> {y}")
    code = recognize(final)
    print(f"pivots {len(pivots)}")
    print(f"code {code.display() if code else '(none)'}")
    fkp, fip = clique_profile(final), independent_profile(final)
    print(f"pi {kp.total * ip.total} -> {fkp.total * fip.total}")
    return 0


def cmd_bounds(args) -> int:
    t, n = args.t, args.n
    lead = leading_term_bound(t)
    print(f"split_{t} {lead.split:.12f}")
    print(f"peak_{t} {lead.value:.12f}")
    print(f"leading_bound(n={n}) {lead.bound(n):.6e}")
    print(f"pi_upper(n={n}) {(n + 1) * 2 ** n}")
    if n >= 1:
        joined, disjoint = extremal_one_turn_codes(n, t)
        print(f"code_joined {joined.display()}")
        print(f"code_disjoint {disjoint.display()}")
    if args.r is not None:
        r = args.r
        m = certificate_length(n, r)
        print(f"certificate_bound(r={r}) {certificate_lower_bound(n, r)}")
        print(f"certificate_counts {','.join(map(str, pigeonhole_sequence(n, r, m)))}")
        print(f"product_upper(r={r}) {multicolor_upper_bound(n, r)}")
        blocks = comb(r, 2)
        base, extra = divmod(n, blocks)
        value = 2**n
        for idx in range(blocks):
            value *= 1 + base + (1 if idx < extra else 0)
        print(f"construction_value(r={r}) {value}")
        if extra == 0:
            print(f"construction_floor(r={r}) {2 ** n * (n // blocks) ** blocks}")
        else:
            print(f"construction_floor(r={r}) {2 ** n * (n / blocks) ** blocks:.6e}")
    if args.graph6 is not None:
        g = parse_graph6(args.graph6.strip())
        if g.n != n:
            raise ValueError(f"--graph6 instance has {g.n} vertices, --n says {n}")
        kp, ip = clique_profile(g), independent_profile(g)
        print(f"instance_pi {kp.total * ip.total}")
        print(f"instance_pi_{t} {kp.count(t) * ip.count(t)}")
    return 0


def cmd_verify(args) -> int:
    suite = SUITES.get(args.suite)
    if suite is None:
        raise ValueError(f"unknown suite {args.suite!r}; pick from {sorted(SUITES)}")
    kwargs = {}
    if args.suite == "compression":
        kwargs = {"trials": args.trials, "n_max": args.n_max, "seed": args.seed}
    elif args.suite == "thresholds":
        kwargs = {"trials": args.trials, "n_max": args.n_max, "seed": args.seed}
    elif args.suite == "borders":
        kwargs = {"t": args.t, "n_max": args.n_max}
    elif args.suite == "multicolor":
        kwargs = {"trials": args.trials, "seed": args.seed}
    elif args.suite == "extremal":
        kwargs = {"n_max": args.n_max, "shards": args.shards}
    report = suite(**{k: v for k, v in kwargs.items() if v is not None})
    for line in report.lines:
        print(line)
    if not report.passed:
        for artifact in report.counterexamples:
            print("counterexample:")
            print(artifact)
        print(f"{report.suite}: FAIL")
        return 1
    print(f"{report.suite}: PASS")
    return 0


def cmd_extremal(args) -> int:
    if args.coloring_r is not None:
        rec = exhaustive_coloring_extremal(args.n, args.coloring_r, args.quantity, args.direction)
    else:
        rec = exhaustive_extremal(
            args.n,
            args.quantity,
            args.direction,
            t=args.t,
            shards=args.shards,
            shard=args.shard,
        )
    print("n,quantity,direction,t,shard,value,total_witnesses,witnesses")
    shard = "" if args.shard is None else args.shard
    t = "" if rec.t is None else rec.t
    witnesses = ";".join(w.replace("\n", "|") for w in rec.witnesses)
    print(f"{rec.n},{rec.quantity},{rec.direction},{t},{shard},{rec.value},{rec.total_witnesses},{witnesses}")
    if not rec.recheck():
        print("witness re-evaluation failed", file=sys.stderr)
        return 1
    return 0


def cmd_exponent(args) -> int:
    report = random_pi_exponent(args.n, args.trials, args.seed)
    lines = report.csv_lines()
    if args.out is not None:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    summary = report.summary()
    print(
        f"# n={summary['n']} trials={summary['trials']} "
        f"min={summary['min']:.6f} median={summary['median']:.6f} max={summary['max']:.6f}",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ngbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact counts of a graph or coloring")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--graph6-file", help="file holding one graph6 string")
    src.add_argument("--coloring", help="coloring file (header 'n r', lines 'u v c')")
    p.add_argument("--t", type=int, action="append", help="also report size-t counts (repeatable)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("compress", help="compress a graph to a threshold graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--graph6-file", help="file holding one graph6 string")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("bounds", help="analytic bound table")
    p.add_argument("--t", type=int, default=3, help="clique/independent-set size (default 3)")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--r", type=int, help="color count for the multicolor rows")
    p.add_argument("--graph6", help="optional instance to evaluate next to the bounds")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {sorted(SUITES)}")
    p.add_argument("--trials", type=int, help="trial count for randomized suites")
    p.add_argument("--n-max", dest="n_max", type=int, help="size ceiling")
    p.add_argument("--seed", type=int, help="base seed for randomized suites")
    p.add_argument("--t", type=int, help="size parameter (borders suite)")
    p.add_argument("--shards", type=int, help="shard count (extremal suite)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extremal", help="exhaustive extremal scan, CSV record output")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--quantity",
        default="pi",
        help="sigma | pi | sigma_t | pi_t (graphs), or sum | product with --coloring-r",
    )
    p.add_argument("--direction", default="max", choices=("min", "max"))
    p.add_argument("--t", type=int, help="size for sigma_t/pi_t")
    p.add_argument("--shards", type=int, default=1, help="partition the mask space into K residues")
    p.add_argument("--shard", type=int, help="process only masks congruent to this residue")
    p.add_argument("--coloring-r", dest="coloring_r", type=int, help="scan total r-colorings instead")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("exponent", help="advisory product-exponent CSV on random graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_exponent)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, ColoringFormatError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
