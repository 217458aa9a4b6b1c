"""Command-line driver: sample / stats / verify / render."""
from __future__ import annotations

import argparse
import os
import sys

from .campaign import iter_records, run_campaign
from .config import parse_config
from .render import render_svg
from .stats import edge_stats, height_variance_stats, holes_stats
from .verify import SUITES, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(prog="sixv",
                                 description="six-vertex half-strip lab")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("sample", help="run a sampling campaign")
    sp.add_argument("--config", help="key=value config file")
    sp.add_argument("--set", action="append", default=[], metavar="KEY=VAL",
                    help="override a config key")
    sp.add_argument("--out", help="raw output file (default <outdir>/raw.txt)")

    st = sub.add_parser("stats", help="statistics over a raw file")
    st.add_argument("raw")
    st.add_argument("--mode", required=True,
                    choices=["edge", "height-variance", "holes"])
    st.add_argument("--q", type=float)
    st.add_argument("--u", type=float)
    st.add_argument("--v", type=float)
    st.add_argument("--M", type=int)
    st.add_argument("--k", type=int, default=1, help="hole levels (holes mode)")
    st.add_argument("--out", help="CSV output path (default stdout)")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", choices=list(SUITES))
    vf.add_argument("--out", help="CSV output path (default stdout)")

    rd = sub.add_parser("render", help="render one sample to SVG")
    rd.add_argument("raw")
    rd.add_argument("index", type=int)
    rd.add_argument("--holes", type=int, default=0,
                    help="draw hole circles for the first k columns")
    rd.add_argument("--out", help="SVG output path (default stdout)")

    args = ap.parse_args(argv)
    if args.cmd == "sample":
        cfg = parse_config(args.config, args.set)
        raw_path = args.out or os.path.join(cfg.outdir, "raw.txt")
        summary = run_campaign(cfg, raw_path)
        ok = "ok" if summary["invariants_ok"] else "INVARIANT-FAILURE"
        line = (f"summary: samples={summary['n_samples']} "
                f"wall={summary['wall_s']:.2f}s invariants={ok} "
                f"raw={summary['raw_path']}")
        print(line)
        with open(raw_path + ".summary", "w") as fh:
            fh.write(line + "\n")
        return 0 if summary["invariants_ok"] else 1

    if args.cmd == "stats":
        if args.mode == "edge":
            for name in ("q", "u", "v", "M"):
                if getattr(args, name) is None:
                    ap.error(f"--{name} is required for edge mode")
            text, ks = edge_stats(args.raw, args.q, args.u, args.v, args.M)
        elif args.mode == "height-variance":
            text = height_variance_stats(args.raw)
        else:
            text = holes_stats(args.raw, args.k)
        _emit(text, args.out)
        return 0

    if args.cmd == "verify":
        rep = run_suite(args.suite)
        _emit(rep.csv(args.suite), args.out)
        return 0 if rep.all_pass else 1

    if args.cmd == "render":
        records = list(iter_records(args.raw))
        if not (0 <= args.index < len(records)):
            ap.error(f"index {args.index} outside 0..{len(records) - 1}")
        _emit(render_svg(records[args.index][1], holes_k=args.holes), args.out)
        return 0
    return 2


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
