#!/usr/bin/env python3
"""Run every cross-check suite over a range of (n, k, l).

Usage: python scripts/run_verification.py [--max-n 4] [--trials 200]
"""

import argparse
import json
import sys
from dataclasses import dataclass

from dgorbits.verify import run_suites


@dataclass
class Config:
    max_n: int = 4
    trials: int = 200
    prime: int = 1009
    max_dim_check_n: int = 6


def main(cfg: Config) -> int:
    failures = 0
    for n in range(2, cfg.max_n + 1):
        for k in range(1, n):
            for l in range(1, n):
                for res in run_suites(
                    n, k, l,
                    prime=cfg.prime,
                    trials=cfg.trials,
                    max_dim_check_n=cfg.max_dim_check_n,
                ):
                    record = {"n": n, "k": k, "l": l, **res.as_dict()}
                    print(json.dumps(record))
                    failures += not res.passed
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--prime", type=int, default=1009)
    ap.add_argument("--max-dim-check-n", type=int, default=6)
    args = ap.parse_args()
    sys.exit(main(Config(
        max_n=args.max_n,
        trials=args.trials,
        prime=args.prime,
        max_dim_check_n=args.max_dim_check_n,
    )))
