"""How the higher-order deficits grow as a regular polygon is perturbed.

Starting from the regular k-gon R_1, one excluded Fourier mode is switched
on with amplitude eps.  Every deficit is a quadratic form with a zero on
the equality class, so deficit / eps^2 should settle to a constant; the
script prints that ratio for each order m.

    python scripts/deficit_scan.py --k 12 --mode 5
"""

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from iso_wirtinger import discrete
from iso_wirtinger.polygon import polygon_from_modes


@dataclass
class ScanConfig:
    k: int = 12
    mode: int = 5
    eps: list = field(default_factory=lambda: [1e-1, 1e-2, 1e-3, 1e-4, 1e-5])


def scan(cfg: ScanConfig):
    rows = []
    for eps in cfg.eps:
        p = polygon_from_modes(cfg.k, {1: 1.0, cfg.mode: eps})
        row = {"eps": eps}
        for m in range(1, cfg.k // 2 + 1):
            r = discrete.isoperimetric_higher(p, m)
            row[m] = r.deficit / eps**2 if abs(cfg.mode) > m and abs(cfg.mode) < cfg.k - m else float("nan")
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=12)
    ap.add_argument("--mode", type=int, default=5)
    args = ap.parse_args(argv)
    cfg = ScanConfig(k=args.k, mode=args.mode)
    rows = scan(cfg)
    orders = [m for m in range(1, cfg.k // 2 + 1)]
    print("eps       " + "".join(f"{'m=' + str(m):>12}" for m in orders))
    for row in rows:
        print(f"{row['eps']:<10.0e}" + "".join(f"{row[m]:>12.6g}" for m in orders))
    # orders whose equality class contains the perturbing mode show nan
    stable = all(
        np.isnan(rows[0][m]) or abs(rows[-1][m] - rows[-2][m]) <= 1e-6 * abs(rows[-2][m]) for m in orders
    )
    print("deficit/eps^2 converged:", stable)
    return 0 if stable else 1


if __name__ == "__main__":
    sys.exit(main())
