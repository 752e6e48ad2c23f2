#!/usr/bin/env python3
"""Tabulate orbit counts, edge counts and open-orbit dimensions.

Usage: python scripts/orbit_counts.py [--max-n 6]
"""

import argparse
from dataclasses import dataclass

from dgorbits import build_graph


@dataclass
class Config:
    max_n: int = 6


def main(cfg: Config):
    print(f"{'n':>3} {'k':>3} {'l':>3} {'orbits':>8} {'edges':>8} "
          f"{'strata':>7} {'open dim':>9}")
    for n in range(2, cfg.max_n + 1):
        for k in range(1, n):
            for l in range(1, n):
                graph = build_graph(n, k, l)
                top = max(graph.dims)
                print(f"{n:>3} {k:>3} {l:>3} {len(graph.vertices):>8} "
                      f"{len(graph.edges):>8} {len(graph.strata):>7} "
                      f"{top:>9}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    main(Config(max_n=ap.parse_args().max_n))
