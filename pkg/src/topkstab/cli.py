"""Command line harness: dataset generation, cross-backend verification,
counter/timing benchmarks, and the subdivision debug dump.

CSV and data go to stdout (or --output); diagnostics go to stderr.  Exit
codes: 0 success / verify passed, 1 verify failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import dataio, harness
from .hive import build_hive, dump_hive


def _out_stream(args):
    if args.output and args.output != "-":
        return open(args.output, "w")
    return sys.stdout


def cmd_gen(args):
    intervals = dataio.generate(args.dist, args.n, args.seed)
    out = _out_stream(args)
    out.write(dataio.format_dataset(intervals))
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_verify(args):
    intervals = dataio.load_intervals(args.input)
    names = args.backend or list(harness.BACKENDS)
    ok, counterexample = harness.verify(intervals, names, args.queries, args.seed)
    if ok:
        print("verify: PASS (%d intervals, %d query values, backends: %s)"
              % (len(intervals), args.queries, ",".join(names)))
        return 0
    print("verify: FAIL backend=%(backend)s q=%(q)r k=%(k)d\n"
          "  expected %(want)r\n"
          "  got      %(got)r" % counterexample, file=sys.stderr)
    return 1


def cmd_bench(args):
    intervals = dataio.load_intervals(args.input)
    rows = harness.bench(intervals, args.backend, args.k or [1],
                         args.queries, args.seed)
    out = _out_stream(args)
    writer = csv.DictWriter(out, fieldnames=harness.BENCH_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_dump_hive(args):
    intervals = dataio.load_intervals(args.input)
    hv = build_hive(intervals)
    out = _out_stream(args)
    out.write(dump_hive(hv))
    if out is not sys.stdout:
        out.close()
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="topkstab",
        description="Top-k weighted interval stabbing: generate, verify, bench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a dataset file")
    p.add_argument("--dist", required=True, choices=dataio.DISTRIBUTIONS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check backends against the brute-force oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--backend", action="append", choices=harness.BACKENDS,
                   help="repeatable; default: all backends")
    p.add_argument("--queries", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="operation-counter/timing report as CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--backend", required=True, choices=harness.BACKENDS)
    p.add_argument("--k", action="append", type=int,
                   help="repeatable; default: 1")
    p.add_argument("--queries", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("dump-hive", help="debug dump of the planar subdivision")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_dump_hive)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (dataio.DatasetError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
