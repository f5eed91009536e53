"""Command-line front end.  Exit status: 0 ok, 1 domain error, 2 usage error."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiment, io, oracle
from .chain import bound_mu
from .cover import TIE_BREAKS, cover_recursive_rm, cover_t
from .errors import DomainError
from .rm import chained_rm


def _rm_args(p, t=False):
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    if t:
        p.add_argument("--t", type=int, default=1)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _inputs(args, n: int, q: int) -> np.ndarray:
    if args.input:
        vs = io.parse_vectors(io.read_text(args.input), n)
        if args.t is not None and args.t != len(vs):
            raise DomainError(f"--t {args.t} but the input holds {len(vs)} vectors")
        return vs
    rng = np.random.default_rng(args.seed)
    return rng.integers(0, q, size=(args.t or 1, n))


def _print_cover(res, trace=False):
    for i, c in enumerate(res.codewords, start=1):
        print(f"c{i}= {' '.join(map(str, c))}")
    print(f"I= {' '.join(map(str, sorted(res.support)))}")
    print(f"|I|={res.size}")
    print(f"|I|<={res.bound}")
    if trace:
        print("trace= " + " ".join(f"{i}:{a}" for i, a in res.trace))


def cmd_ghw(args):
    for t, d in enumerate(chained_rm(args.q, args.r, args.m).d, start=1):
        print(t, d)


def cmd_chained(args):
    _emit(io.format_chained(chained_rm(args.q, args.r, args.m)), args.out)


def cmd_bound(args):
    if args.matrix:
        ch = io.parse_chained(io.read_text(args.matrix))
    elif args.r is not None and args.m is not None:
        ch = chained_rm(args.q, args.r, args.m)
    else:
        raise DomainError("give --matrix or both --r and --m")
    print(bound_mu(ch, args.t))


def cmd_cover(args):
    ch = io.parse_chained(io.read_text(args.matrix))
    vs = _inputs(args, ch.n, ch.q)
    _print_cover(cover_t(ch, vs, args.tie_break), args.trace)


def cmd_cover_rm(args):
    vs = _inputs(args, 2 ** args.m, 2)
    res = cover_recursive_rm(args.r, args.m, vs, args.tie_break)
    _print_cover(res)
    print(f"branch={res.branch}")


def cmd_oracle(args):
    G = io.parse_matrix(io.read_text(args.matrix))
    if args.what == "radius":
        print(oracle.exact_generalized_radius(G, args.t))
    elif args.what == "ghw":
        for r, d in enumerate(oracle.exact_ghw(G), start=1):
            print(r, d)
    else:
        v = io.parse_vectors(io.read_text(args.input), G.n)[0]
        cw, dist = oracle.exact_nearest(G, v)
        print(" ".join(map(str, cw)))
        print(dist)


def _m_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected a..b") from exc
    return range(lo, hi + 1)


def cmd_experiment(args):
    if args.what == "sweep":
        grid = [tuple(int(x) for x in ln.split()) for ln in io.read_text(args.grid).splitlines()
                if ln.strip() and not ln.lstrip().startswith("#")]
        if args.exact:
            rows = experiment.sweep_exact(grid, args.tmax, args.jobs, args.skip_over_budget)
            cols = experiment.EXACT_COLUMNS
        else:
            rows = experiment.sweep_mu(grid, args.tmax, args.jobs)
            cols = experiment.MU_COLUMNS
        text = experiment.write_csv(rows, cols, args.csv)
        if not args.csv:
            sys.stdout.write(text)
    else:
        rows, slope = experiment.timing_scan(args.m_range, args.t, args.algorithm, args.r,
                                             args.reps, args.seed)
        text = experiment.write_csv(rows, ["m", "n", "t", "median_ns"], args.csv)
        if not args.csv:
            sys.stdout.write(text)
        print(f"slope={slope:.4f}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaincover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ghw", help="GHW hierarchy of RM_q(r,m) as 't d_t' lines")
    _rm_args(p)
    p.set_defaults(func=cmd_ghw)

    p = sub.add_parser("chained-matrix", help="chained generator matrix of RM_q(r,m)")
    _rm_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_chained)

    p = sub.add_parser("bound", help="the bound mu_t")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--matrix")
    p.add_argument("--t", type=int, default=1)
    p.set_defaults(func=cmd_bound)

    for name, func in (("cover", cmd_cover), ("cover-rm", cmd_cover_rm)):
        p = sub.add_parser(name, help="t-cover input vectors")
        if name == "cover":
            p.add_argument("--matrix", required=True)
            p.add_argument("--trace", action="store_true")
        else:
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
        p.add_argument("--t", type=int)
        p.add_argument("--input")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tie-break", choices=TIE_BREAKS, default="min")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="exhaustive reference values")
    p.add_argument("what", choices=["radius", "ghw", "nearest"])
    p.add_argument("--matrix", required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--input")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("experiment", help="CSV sweeps and timing scans")
    p.add_argument("what", choices=["sweep", "timing"])
    p.add_argument("--grid")
    p.add_argument("--tmax", type=int, default=1)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--skip-over-budget", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--m-range", type=_m_range, default=range(6, 15))
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--algorithm", choices=["cover", "cover-rm"], default="cover")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--reps", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is cmd_oracle and args.what == "nearest" and not args.input:
        parser.error("oracle nearest needs --input")
    if args.func is cmd_experiment and args.what == "sweep" and not args.grid:
        parser.error("experiment sweep needs --grid")
    try:
        args.func(args)
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
