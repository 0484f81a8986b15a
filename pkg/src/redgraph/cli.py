"""``redgraph`` command line: graph6 lines in, CSV / JSON / graph6 out.

Exit status: 0 success, 1 domain error (bad graph6, bad vertex, ...),
2 usage error.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

import numpy as np

from . import enumeration as en
from . import gnp, nibble as nb, transforms as tf
from .graph6 import Graph6Error, from_graph6, to_graph6
from .redundancy import classify, classify_mask

log = logging.getLogger("redgraph")

# (argv, stdin or None, expected stdout); rendered into --help and executed by the tests
EXAMPLES = [
    (["classify"], "Dhc\n", "WEAK\n"),
    (["classify"], "", ""),
    (["kappa", "--n", "11"], None, "12279669\n"),
    (["transform", "--op", "short", "--vertex", "0"], "Dhc\n", "Cl\n"),
    (["enum", "--n", "5", "--table", "weak-edges"], None, "n,max_edges,f\n1,,\n2,,\n3,,\n4,,\n5,5,5\n"),
]


def _epilog() -> str:
    lines = ["examples:"]
    for argv, stdin, out in EXAMPLES:
        cmd = "redgraph " + " ".join(argv)
        if stdin is not None:
            text = stdin.replace("\n", "\\n")
            cmd = f"printf '{text}' | {cmd}"
        lines.append(f"  $ {cmd}")
        for o in out.splitlines():
            lines.append(f"    {o}")
    return "\n".join(lines)


def _default_seed() -> int:
    return int(os.environ.get("REDGRAPH_SEED", "0"))


def _input_lines(path):
    fh = sys.stdin if path in (None, "-") else open(path)
    for line in fh:
        line = line.strip()
        if line:
            yield line


def _analyze_line(line: str) -> str:
    g = from_graph6(line)
    d = classify(g).to_dict()
    d["graph6"] = line
    return json.dumps(d, sort_keys=True)


def _classify_line(line: str) -> str:
    return classify_mask(from_graph6(line)).value


def _stream(func, lines, jobs: int, out) -> None:
    """Apply ``func`` per line, order preserved, memory bounded by one batch."""
    if jobs <= 1:
        for line in lines:
            out.write(func(line) + "\n")
        return
    with ProcessPoolExecutor(jobs) as pool:
        it = iter(lines)
        while True:
            batch = list(islice(it, 1024 * jobs))
            if not batch:
                break
            for res in pool.map(func, batch, chunksize=256):
                out.write(res + "\n")


def cmd_analyze(args, out):
    _stream(_analyze_line, _input_lines(args.input), args.jobs, out)


def cmd_classify(args, out):
    _stream(_classify_line, _input_lines(args.input), args.jobs, out)


def _parse_map(text: str) -> dict[int, int]:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        a, b = item.split(":")
        out[int(a)] = int(b)
    return out


def cmd_transform(args, out):
    other = from_graph6(args.other) if args.other else None
    for line in _input_lines(args.input):
        g = from_graph6(line)
        op = args.op
        if op in ("short", "pshort", "split") and args.vertex is None:
            raise ValueError(f"--op {op} needs --vertex")
        if op == "short":
            h = tf.short(g, args.vertex)
        elif op == "pshort":
            h = tf.partial_short(g, args.vertex)
        elif op == "split":
            h = tf.split_twin(g, args.vertex, args.kind)
        elif op == "dominate":
            h = tf.add_dominating_twins(g, args.k)
        elif op == "strengthen":
            h = tf.strengthen_by_twin_split(g)
        elif op == "spider":
            h = tf.spider_weaken(g)
        elif op in ("tensor", "merge"):
            if other is None:
                raise ValueError(f"--op {op} needs --other GRAPH6")
            h = tf.tensor_product(g, other) if op == "tensor" else tf.merge(g, other, _parse_map(args.map))
        out.write(to_graph6(h) + "\n")


def cmd_nibble(args, out):
    policy = nb.NibblePolicy(nb.Selector(args.policy), args.seed)
    for line in _input_lines(args.input):
        trace = nb.nibble(from_graph6(line), policy, audit=args.audit)
        d = trace.to_dict()
        d["graph6"] = line
        out.write(json.dumps(d, sort_keys=True) + "\n")


def _point(text: str) -> tuple[int, int]:
    r, c = text.split(",")
    return int(r), int(c)


def cmd_mesh(args, out):
    with open(args.mask) as fh:
        mask = nb.read_mask(fh)
    spec = nb.MeshSpec(args.kind, mask)
    if args.query:
        s, t = (_point(x) for x in args.query)
        dist = nb.mesh_distance_query(spec, s, t)
        out.write(f"{dist}\n")
    else:
        g, _ = nb.mesh_graph(spec)
        out.write(to_graph6(g) + "\n")


def cmd_enum(args, out):
    if args.n >= 9 and not args.long_run:
        raise ValueError("n >= 9 takes a long time; pass --long-run to proceed")
    w = csv.writer(out, lineterminator="\n")
    kw = {"cache_dir": args.cache, "workers": args.jobs}
    if args.table == "stats":
        w.writerow(en.StatsRow.header())
        for n in range(1, args.n + 1):
            all_row, con_row = en.stats_rows(n, cache_dir=args.cache, workers=args.jobs)
            w.writerow((con_row if args.connected else all_row).as_row())
    elif args.table == "kappa":
        w.writerow(["n", "kappa", "kappa_strong", "strong_diam_lt3"])
        for n in range(1, args.n + 1):
            d3 = en.diameter_lt3_count(n - 1, **kw)
            w.writerow([n, en.kappa(n), en.kappa_strong(n, d3), en.strong_diameter_lt3_count(n, **kw)])
    else:
        w.writerow(["n", "max_edges", "f"])
        for n in range(1, args.n + 1):
            try:
                m, f = en.max_weak_edges(n, **kw)
            except ValueError:
                m = f = ""
            w.writerow([n, m, f])


def _grid(args) -> np.ndarray:
    return np.linspace(args.p_from, args.p_to, args.steps)


def cmd_gnp(args, out):
    rows = gnp.gnp_scan(args.n, _grid(args), args.samples, args.seed, jobs=args.jobs, second_order=args.second_order)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(gnp.GnpRow.header())
    for r in rows:
        w.writerow(r.as_row())


def cmd_formulas(args, out):
    rows = gnp.formula_curves(args.n, _grid(args))
    th = gnp.thresholds(args.n)
    w = csv.writer(out, lineterminator="\n")
    keys = list(rows[0]) + ["L", "weak_p", "weak_end_p", "diam2_p", "strong_p"]
    w.writerow(keys)
    for r in rows:
        w.writerow(list(r.values()) + [th.L, th.weak_p, th.weak_end_p, th.diam2_p, th.strong_p])


def cmd_kappa(args, out):
    out.write(f"{en.kappa(args.n)}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="redgraph",
        description="Distance-redundant and distance-critical graphs.",
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
        return sp

    sp = with_input(sub.add_parser("analyze", help="JSON redundancy report per graph6 line"))
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_analyze)

    sp = with_input(sub.add_parser("classify", help="WEAK / STRONG / NEITHER per graph6 line"))
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_classify)

    sp = with_input(sub.add_parser("transform", help="apply a graph surgery to each line"))
    sp.add_argument("--op", required=True, choices=["short", "pshort", "tensor", "merge", "split", "dominate", "strengthen", "spider"])
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--kind", choices=["weak", "strong"], default="weak")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--other", help="second operand (graph6) for tensor/merge")
    sp.add_argument("--map", default="", help="merge correspondence, e.g. 0:3,1:4")
    sp.set_defaults(func=cmd_transform)

    sp = with_input(sub.add_parser("nibble", help="nibble each graph; JSON trace per line"))
    sp.add_argument("--policy", choices=[s.value for s in nb.Selector], default=nb.Selector.MIN_DEGREE_THEN_INDEX.value)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--audit", action="store_true", help="certify every step with distance matrices")
    sp.set_defaults(func=cmd_nibble)

    sp = sub.add_parser("mesh", help="mesh graph (graph6) or a distance query by nibbling")
    sp.add_argument("--kind", choices=["tri", "sq", "hex"], required=True)
    sp.add_argument("--mask", required=True, help="file with one 'row col' cell per line")
    sp.add_argument("--query", nargs=2, metavar="R,C")
    sp.set_defaults(func=cmd_mesh)

    sp = sub.add_parser("enum", help="exhaustive tables as CSV")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--table", choices=["stats", "kappa", "weak-edges"], default="stats")
    sp.add_argument("--cache", default=None, help="directory for graphs_n{N}.g6 checkpoints")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--long-run", action="store_true", help="allow n >= 9")
    sp.set_defaults(func=cmd_enum)

    for name, helptext, func in (
        ("gnp", "Monte-Carlo G(n,p) scan as CSV", cmd_gnp),
        ("formulas", "analytic G(n,p) curves as CSV", cmd_formulas),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p-from", type=float, default=0.01)
        sp.add_argument("--p-to", type=float, default=0.6)
        sp.add_argument("--steps", type=int, default=60)
        if name == "gnp":
            sp.add_argument("--samples", type=int, default=200)
            sp.add_argument("--seed", type=int, default=_default_seed())
            sp.add_argument("--jobs", type=int, default=1)
            sp.add_argument("--second-order", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("kappa", help="number of order-n graphs with a complete component")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_kappa)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        args.func(args, out)
    except BrokenPipeError:
        return 0
    except (Graph6Error, ValueError, IndexError, OSError) as exc:
        print(f"redgraph {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
