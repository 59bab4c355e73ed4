#!/usr/bin/env python3
"""Thread-scaling experiment: sequential baseline vs parallel engines.

Writes one CSV per engine/ordering combination plus an aligned summary
table to stdout. Example:

    python scripts/scaling_experiment.py --gen gnp:1200,0.2,42 \
        --threads 1,2,4 --out-dir results/
"""

from __future__ import annotations

import argparse
import os
from pathlib import Path

from parmce.cli import RunConfig, format_sweep_table, scaling_sweep, write_sweep_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gen", default="gnp:1200,0.2,42",
                    help="generator spec (moonmoser:k | gnp:n,p,seed | complete:n)")
    ap.add_argument("--threads", default=None,
                    help="comma-separated thread counts (default: 1..cpu_count)")
    ap.add_argument("--orders", default="degree",
                    help="comma-separated parmce orderings, or 'all'")
    ap.add_argument("--cutoff", type=int, default=16)
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    cpus = os.cpu_count() or 1
    threads = (
        [int(t) for t in args.threads.split(",")]
        if args.threads
        else sorted({1, max(2, cpus // 2), cpus})
    )
    orders = (
        ["degree", "triangle", "degeneracy"]
        if args.orders == "all"
        else args.orders.split(",")
    )

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    runs = [("parttt", None)] + [("parmce", o) for o in orders]
    for algo, order in runs:
        label = algo if order is None else f"{algo}-{order}"
        cfg = RunConfig(gen=args.gen, algo=algo, order=order, cutoff=args.cutoff)
        rows = scaling_sweep(cfg, threads)
        print(f"\n== {label} on {args.gen} ==")
        print(format_sweep_table(rows))
        csv_path = out_dir / f"sweep_{label}.csv"
        write_sweep_csv(rows, str(csv_path))
        print(f"wrote {csv_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
