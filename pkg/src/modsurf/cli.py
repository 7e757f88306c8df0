"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import json
import sys

from . import covers as covers_mod
from .experiment import ExperimentConfig, emit_plot_data, rows_to_csv, run_experiment
from .metrics import (
    distance_stats,
    surface_distance_cover,
    surface_distance_oracle,
)
from .modular import SubgroupSpec
from .orbit import BallQuery, enumerate_ball
from .sampling import sample_points
from .search import equilateral_search
from .domain import classify_in_F, reduce_to_F
from .uhp import UHPoint


def _spec(s):
    return SubgroupSpec.parse(s)


def _point(s):
    return UHPoint.parse(s)


def cmd_distance(args):
    spec = _spec(args.group)
    p = _point(args.p)
    q = _point(args.q)
    if args.method == "cover":
        up, _ = reduce_to_F(p.to_exact())
        uq, _ = reduce_to_F(q.to_exact())
        rp, rq = classify_in_F(up), classify_in_F(uq)
        if rp != rq:
            print("points reduce to different regions; use --method oracle",
                  file=sys.stderr)
            return 2
        cover = covers_mod.cover_Fu(spec) if rp == "Fu" else covers_mod.cover_Fo(spec)
        key = surface_distance_cover(up, uq, cover)
    else:
        key = surface_distance_oracle(p, q, spec)
    print(json.dumps({
        "cosh2": str(key.value) if key.exact else float(key.value),
        "distance": key.distance(),
        "exact": key.exact,
        "method": args.method,
    }))
    return 0


def cmd_cover(args):
    spec = _spec(args.group)
    if args.region == "fu":
        cover = covers_mod.cover_Fu(spec)
    else:
        cover = covers_mod.cover_Fo(spec)
    out = cover.to_dict()
    rc = 0
    if args.verify:
        report = covers_mod.verify_cover(cover, args.verify, args.seed)
        out["verification"] = report.to_dict()
        if not report.passed:
            rc = 1
    print(json.dumps(out))
    return rc


def cmd_enumerate(args):
    spec = _spec(args.group)
    q = BallQuery(spec, _point(args.center), _point(args.source), args.cosh)
    elems = enumerate_ball(q)
    print(json.dumps([g.to_list() for g in elems]))
    return 0


def cmd_stats(args):
    spec = _spec(args.group)
    pts = []
    with open(args.points) as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                pts.append(UHPoint.parse(line))
    stats = distance_stats(pts, spec)
    out = {
        "N": stats.n_points,
        "distinct": stats.distinct,
        "Q": stats.quadruple_count,
        "bound": float(stats.cs_bound),
    }
    print(json.dumps(out))
    if args.histogram:
        with open(args.histogram, "w") as f:
            f.write("cosh2,ordered_pairs\n")
            for key, m in zip(stats.keys, stats.multiplicities):
                f.write("%s,%d\n" % (key.value, m))
    return 0


def cmd_sample(args):
    spec = _spec(args.group)
    pts = sample_points(spec, args.n, sampler=args.sampler, seed=args.seed,
                        y_cap=args.y_cap)
    for p in pts:
        print(str(p))
    return 0


def cmd_equilateral(args):
    spec = _spec(args.group)
    cand = equilateral_search(spec, args.k, args.d, seed=args.seed)
    if cand is None:
        print(json.dumps({"found": False}))
        return 1
    out = cand.to_dict()
    out["found"] = True
    print(json.dumps(out))
    return 0


def cmd_experiment(args):
    config = ExperimentConfig.load(args.config)
    rows = run_experiment(config)
    csv = emit_plot_data(rows) if args.plot_data else rows_to_csv(rows)
    if config.output:
        with open(config.output, "w") as f:
            f.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="modsurf")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="surface distance between two points")
    p.add_argument("--group", default="full")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--method", choices=("cover", "oracle"), default="oracle")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("cover", help="construct (and verify) a geodesic cover")
    p.add_argument("--group", default="full")
    p.add_argument("--region", choices=("fu", "fo"), required=True)
    p.add_argument("--verify", type=int, default=0, metavar="SAMPLES")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("enumerate", help="orbit ball enumeration")
    p.add_argument("--group", default="full")
    p.add_argument("--center", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--cosh", type=float, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="distance statistics of a points file")
    p.add_argument("--group", default="full")
    p.add_argument("--points", required=True)
    p.add_argument("--histogram", help="optional CSV of the multiplicity histogram")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sample", help="sample points in the fundamental domain")
    p.add_argument("--group", default="full")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sampler", choices=("grid", "uniform"), default="grid")
    p.add_argument("--y-cap", type=float, default=10.0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("equilateral", help="search for an equilateral point set")
    p.add_argument("--group", default="full")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-d", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_equilateral)

    p = sub.add_parser("experiment", help="run a distinct-distance sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--plot-data", action="store_true")
    p.set_defaults(func=cmd_experiment)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        rc = args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as e:
        print("error: %s" % e, file=sys.stderr)
        rc = 2
    return rc


if __name__ == "__main__":
    sys.exit(main())
