#!/usr/bin/env python3
"""Generate a small reproducible corpus of edge-list files for benchmarking."""

from __future__ import annotations

import argparse
from pathlib import Path

from parmce import gen_complete, gen_gnp, gen_moon_moser, write_edge_list


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="datasets")
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    corpus = {
        "moonmoser_k6.txt": gen_moon_moser(6),
        "moonmoser_k8.txt": gen_moon_moser(8),
        "complete_n20.txt": gen_complete(20),
        "gnp_500_0.1.txt": gen_gnp(500, 0.1, args.seed),
        "gnp_1200_0.2.txt": gen_gnp(1200, 0.2, args.seed),
    }
    for name, g in corpus.items():
        path = out / name
        with open(path, "w") as f:
            write_edge_list(g, f)
        print(f"{path}: n={g.n} m={g.m}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
