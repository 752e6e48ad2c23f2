#!/usr/bin/env python3
"""Walk one orbit datum through the whole pipeline.

Renders the marked pair and common diagram, compares the hook dimension
against both stabilizer computations, and prints the desingularization
word.  The default datum lives in Gr(4,9) x Gr(3,9).

Usage: python scripts/datum_walkthrough.py [--datum '{"n":..,...}']
"""

import argparse
import json
from dataclasses import dataclass

from dgorbits import (
    OrbitDatum,
    canonical_point,
    common_diagram,
    desingularization,
    dimension,
    hook_union,
    marked_pair,
    rank,
    stabilizer_dim_oracle,
    stabilizer_system_prop2,
    stratum,
)
from dgorbits.serialize import datum_from_json


DEFAULT = OrbitDatum.make(9, 4, 3, (3, 5, 6, 9), (2, 5), [(7, 9)])


@dataclass
class Config:
    datum: OrbitDatum = DEFAULT


def render(diagram, dot_cells):
    lines = []
    for r in range(1, diagram.height + 1):
        row = diagram.rows[r - 1]
        lines.append("".join(
            "[*]" if (r, c) in dot_cells else "[ ]" for c in range(1, row + 1)
        ))
    return "\n".join(lines) or "(empty)"


def main(cfg: Config):
    datum = cfg.datum
    print(f"datum: alpha={datum.alpha} beta={datum.beta} "
          f"pairs={datum.pairs}")
    mp = marked_pair(datum)
    print("\nfirst diagram:")
    print(render(mp.first, set(mp.dot_cells(mp.first))))
    print("\nsecond diagram:")
    print(render(mp.second, set(mp.dot_cells(mp.second))))
    cd = common_diagram(mp)
    print(f"\ncommon diagram shape: {cd.shape}, "
          f"#Ycom={len(cd.boxes)}, #H={len(hook_union(cd))}")
    dim = dimension(datum)
    total = datum.n * (datum.n + 1) // 2
    print(f"\nrank {rank(datum)}, stratum {stratum(datum)}, dimension {dim}")
    print(f"stabilizer system nullity: "
          f"{stabilizer_system_prop2(datum).nullity()} "
          f"(orbit dim {total - stabilizer_system_prop2(datum).nullity()})")
    print(f"stabilizer oracle nullity: {stabilizer_dim_oracle(datum)} "
          f"(orbit dim {total - stabilizer_dim_oracle(datum)})")
    U, W = canonical_point(datum)
    print(f"\ncanonical point: U jumps {U.jumps()}, W jumps {W.jumps()}")
    dd = desingularization(datum)
    print(f"\ndesingularization word: {list(dd.word)}")
    print(f"from minimal orbit alpha={dd.minimal.alpha} "
          f"beta={dd.minimal.beta}")
    print(f"Schubert words: {list(dd.bs_first.word)} and "
          f"{list(dd.bs_second.word)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--datum", type=str, default=None,
                    help="orbit datum as JSON")
    args = ap.parse_args()
    cfg = Config()
    if args.datum:
        cfg.datum = datum_from_json(json.loads(args.datum))
    main(cfg)
