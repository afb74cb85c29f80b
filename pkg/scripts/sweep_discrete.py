"""Sweep the discrete inequalities over k and m on random polygons.

Prints one CSV row per (theorem, k, m): number of samples, smallest
deficit/scale, largest deficit/scale and how many reports held.

    python scripts/sweep_discrete.py --k-max 16 --samples 50
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from iso_wirtinger import discrete
from iso_wirtinger.polygon import random_polygon

ORDERED = {
    "wirtinger": (discrete.wirtinger_m, 0),
    "wirtinger-s": (discrete.wirtinger_s_form, 0),
    "discrete-higher": (discrete.isoperimetric_higher, 0),
    "stability-c": (discrete.stability_c, 1),
    "stability-s": (discrete.stability_s, 1),
}


@dataclass
class SweepConfig:
    k_min: int = 3
    k_max: int = 16
    samples: int = 50
    seed: int = 0


def sweep(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    for k in range(cfg.k_min, cfg.k_max + 1):
        polygons = [random_polygon(k, rng=rng) for _ in range(cfg.samples)]
        for name, (fn, slack) in ORDERED.items():
            for m in range(1, k // 2 - slack + 1):
                reports = [fn(p, m) for p in polygons]
                yield _row(name, k, m, reports)
        for name, fn in (("chakerian-v1", discrete.chakerian_v1), ("chakerian-v2", discrete.chakerian_v2)):
            yield _row(name, k, 1, [fn(p) for p in polygons])


def _row(name, k, m, reports):
    ratios = [r.deficit / r.scale for r in reports]
    return {
        "theorem": name,
        "k": k,
        "m": m,
        "samples": len(reports),
        "min_ratio": min(ratios),
        "max_ratio": max(ratios),
        "held": sum(r.holds for r in reports),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=3)
    ap.add_argument("--k-max", type=int, default=16)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.k_min, args.k_max, args.samples, args.seed)
    writer = None
    failed = 0
    for row in sweep(cfg):
        if writer is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
            writer.writeheader()
        failed += row["samples"] - row["held"]
        writer.writerow(row)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
