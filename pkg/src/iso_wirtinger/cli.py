"""Command-line front end.

    iso-wirtinger verify --theorem discrete-higher --k 8 --m 3 --count 100 --seed 7
    iso-wirtinger verify --theorem chernoff --k 2 --m 1 --input circle.json
    iso-wirtinger tables --k 4 --m 2
    iso-wirtinger tables --smooth --m 3
    iso-wirtinger generate polygon --k 6 --modes 2 --seed 1

Exit codes: 0 when every report holds, 2 when any inequality is violated or
an input breaks a hypothesis, 1 on usage, parse or range errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import chernoff, discrete, smooth
from . import io as fmt
from .coeffs import discrete_table, smooth_table
from .errors import HypothesisViolation, IsoWirtingerError, ParameterError
from .polygon import make_regular, random_equilateral, random_polygon
from .report import default_tolerance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

DISCRETE_ORDERED = {
    "wirtinger": (discrete.wirtinger_m, 0),
    "wirtinger-lambda": (discrete.wirtinger_lambda_form, 0),
    "wirtinger-s": (discrete.wirtinger_s_form, 0),
    "discrete-higher": (discrete.isoperimetric_higher, 0),
    "stability-c": (discrete.stability_c, 1),
    "stability-s": (discrete.stability_s, 1),
    "length-even": (discrete.length_form_even, 0),
}
DISCRETE_PLAIN = {
    "chakerian-v1": discrete.chakerian_v1,
    "chakerian-v2": discrete.chakerian_v2,
}
SMOOTH = ("gen-wirtinger", "smooth-higher")
SUPPORT = ("chernoff", "chernoff-core")
THEOREMS = tuple(DISCRETE_ORDERED) + tuple(DISCRETE_PLAIN) + ("equilateral",) + SMOOTH + SUPPORT

CSV_COLUMNS = (
    "input_index",
    "theorem_id",
    "k",
    "m",
    "lhs",
    "rhs",
    "deficit",
    "holds",
    "equality",
    "active_modes",
    "tolerance",
    "status",
)


@dataclass
class RunConfig:
    command: str
    theorem: str | None = None
    input_path: str | None = None
    k: int | None = None
    m: int | None = None
    count: int = 1
    seed: int = 0
    degree: int = 6
    tolerance: float = 1e-9
    auto_recenter: bool = False
    output_format: str = "json"
    output_path: str | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ParameterError("tolerance must be positive")
        if self.count < 1:
            raise ParameterError("count must be at least 1")


# --------------------------------------------------------------------------
# verify


def _orders(theorem: str, k: int, m: int | None) -> list[int]:
    if m is not None:
        return [m]
    _, slack = DISCRETE_ORDERED[theorem]
    top = k // 2 - slack
    orders = list(range(1, top + 1))
    if theorem == "length-even":
        orders = [v for v in orders if v % 2 == 0]
    return orders


def _inputs(cfg: RunConfig) -> list:
    theorem = cfg.theorem
    rng = np.random.default_rng(cfg.seed)
    if theorem in SMOOTH:
        if cfg.input_path:
            return fmt.load_curves(cfg.input_path)
        curves = [smooth.random_curve(cfg.degree, rng=rng) for _ in range(cfg.count)]
        if theorem == "smooth-higher":
            curves = [smooth.reparametrize_by_arclength(c).recentered() for c in curves]
        return curves
    if theorem in SUPPORT:
        if cfg.input_path:
            return fmt.load_supports(cfg.input_path)
        return [chernoff.random_support(cfg.degree, rng=rng) for _ in range(cfg.count)]
    if cfg.input_path:
        return fmt.load_polygons(cfg.input_path)
    if cfg.k is None:
        raise ParameterError(f"--k is required to generate random inputs for {theorem}")
    if theorem == "equilateral":
        return [random_equilateral(cfg.k, rng=rng) for _ in range(cfg.count)]
    return [random_polygon(cfg.k, rng=rng) for _ in range(cfg.count)]


def _jobs(cfg: RunConfig, item) -> list[tuple[int | None, Callable]]:
    """(order, thunk) pairs for one input."""
    t = cfg.theorem
    tol = cfg.tolerance
    rc = cfg.auto_recenter
    if t in DISCRETE_ORDERED:
        fn, _ = DISCRETE_ORDERED[t]
        return [(m, lambda m=m: fn(item, m, auto_recenter=rc, tolerance=tol)) for m in _orders(t, item.k, cfg.m)]
    if t in DISCRETE_PLAIN:
        fn = DISCRETE_PLAIN[t]
        return [(None, lambda: fn(item, auto_recenter=rc, tolerance=tol))]
    if t == "equilateral":
        return [(None, lambda: discrete.equilateral_bound(item, tolerance=tol))]
    m = cfg.m or 1
    if t == "gen-wirtinger":
        return [(m, lambda: smooth.gen_wirtinger(item, m, auto_recenter=rc, tolerance=tol))]
    if t == "smooth-higher":
        return [
            (m, lambda: smooth.smooth_isoperimetric(item, m, auto_recenter=rc, auto_reparametrize=True, tolerance=tol))
        ]
    k = cfg.k if cfg.k is not None else 2
    if t == "chernoff":
        return [(m, lambda: chernoff.chernoff_theorem(item, k, m, tolerance=tol))]
    return [(m, lambda: chernoff.chernoff_core(item, k, m, tolerance=tol))]


def _clean(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def run_verify(cfg: RunConfig) -> tuple[int, list[dict]]:
    """Evaluate every (input, theorem, order) triple; hypothesis errors are recorded, not raised."""
    records = []
    for index, item in enumerate(_inputs(cfg)):
        for m, job in _jobs(cfg, item):
            try:
                rec = job().to_dict()
            except HypothesisViolation as exc:
                rec = {"theorem_id": cfg.theorem, "m": m, "status": "hypothesis-error", "error": str(exc)}
            records.append(_clean({"input_index": index, **rec}))
    ok = all(r["status"] == "holds" for r in records)
    return (EXIT_OK if ok else EXIT_VIOLATION), records


def format_records(records: list[dict], output_format: str) -> str:
    if output_format == "json":
        return "".join(fmt.dumps(r) + "\n" for r in records)
    buf = _stdio.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        row = []
        for col in CSV_COLUMNS:
            v = r.get(col, "")
            if col == "active_modes" and isinstance(v, list):
                v = " ".join(str(x) for x in v)
            elif isinstance(v, float):
                v = repr(v)
            row.append("" if v is None else v)
        writer.writerow(row)
    return buf.getvalue()


# --------------------------------------------------------------------------
# tables and generate


def run_tables(k: int | None, m: int, is_smooth: bool) -> str:
    table = smooth_table(m) if is_smooth else discrete_table(m, k)
    buf = _stdio.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("family", "m", "k", "index", "value"))
    for family, mm, kk, index, value in table.rows():
        writer.writerow((family, mm, kk, index, repr(value)))
    return buf.getvalue()


def run_generate(args) -> object:
    kind = args.kind
    if kind == "polygon":
        if args.k is None:
            raise ParameterError("generate polygon needs --k")
        if args.regular is not None:
            return fmt.polygon_to_json(make_regular(args.regular, args.k))
        return fmt.polygon_to_json(random_polygon(args.k, mode_bound=args.modes, seed=args.seed))
    if kind == "curve":
        if args.equality:
            return fmt.curve_to_json(smooth.equality_curve(args.m or 1, seed=args.seed))
        c = smooth.random_curve(args.degree, seed=args.seed)
        if args.arclength:
            c = smooth.reparametrize_by_arclength(c).recentered()
        return fmt.curve_to_json(c)
    if args.circle:
        return fmt.support_to_json(chernoff.support_circle(args.r))
    return fmt.support_to_json(chernoff.random_support(args.degree, seed=args.seed))


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iso-wirtinger", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="evaluate an inequality on inputs or random fixtures")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    v.add_argument("--input", dest="input_path")
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int, help="order (default: every admissible order for polygon inequalities, else 1)")
    v.add_argument("--count", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--degree", type=int, default=6, help="degree of random curves / support functions")
    v.add_argument("--tolerance", type=float)
    v.add_argument("--auto-recenter", action="store_true")
    v.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    v.add_argument("--output", dest="output_path")

    t = sub.add_parser("tables", help="dump coefficient tables as CSV")
    t.add_argument("--k", type=int)
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--smooth", action="store_true")
    t.add_argument("--output", dest="output_path")

    g = sub.add_parser("generate", help="write a fixture file")
    g.add_argument("kind", choices=("polygon", "curve", "support"))
    g.add_argument("--k", type=int)
    g.add_argument("--modes", type=int, help="keep only modes |nu| <= MODES")
    g.add_argument("--regular", type=int, help="write the regular polygon R_n instead")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--degree", type=int, default=6)
    g.add_argument("--equality", action="store_true")
    g.add_argument("--arclength", action="store_true")
    g.add_argument("--m", type=int)
    g.add_argument("--circle", action="store_true")
    g.add_argument("--r", type=float, default=1.0)
    g.add_argument("--output", dest="output_path")
    return parser


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command == "verify":
            tol = args.tolerance if args.tolerance is not None else default_tolerance()
            cfg = RunConfig(
                command="verify",
                theorem=args.theorem,
                input_path=args.input_path,
                k=args.k,
                m=args.m,
                count=args.count,
                seed=args.seed,
                degree=args.degree,
                tolerance=tol,
                auto_recenter=args.auto_recenter,
                output_format=args.output_format,
                output_path=args.output_path,
            )
            code, records = run_verify(cfg)
            _emit(format_records(records, cfg.output_format), cfg.output_path)
            return code
        if args.command == "tables":
            if not args.smooth and args.k is None:
                raise ParameterError("tables needs --k or --smooth")
            _emit(run_tables(args.k, args.m, args.smooth), args.output_path)
            return EXIT_OK
        _emit(fmt.dumps(run_generate(args)) + "\n", args.output_path)
        return EXIT_OK
    except (IsoWirtingerError, ValueError, OSError) as exc:
        print(f"iso-wirtinger: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
