"""Time the compiled kernels against the numpy fallback on the same inputs.

    python3 benchmarks/bench_kernels.py --p 2 --deg 10 --repeat 5
"""

import argparse
import json
import sys
import time

import numpy as np

from ffperm import kernels, make_field


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(ctx, rng):
    p, deg = ctx.p, ctx.deg
    log, exp = ctx._tables()
    a = rng.integers(0, ctx.order, 200_000).astype(np.int64)
    b = rng.integers(0, ctx.order, 200_000).astype(np.int64)
    xs = ctx.indices()
    exps = [int(e) for e in rng.integers(1, ctx.order, 8)]
    coeffs = rng.integers(0, ctx.order, len(exps)).astype(np.int64)
    images = rng.integers(0, ctx.order, ctx.order).astype(np.int64)
    perm = rng.permutation(ctx.order).astype(np.int64)
    lam = (xs % max(1, ctx.order // p)).astype(np.int64)
    out = {
        "add": lambda k: k.add(a, b, p, deg),
        "mul": lambda k: k.mul(a, b, log, exp),
        "power": lambda k: k.power(a, 12345, log, exp),
        "poly_eval": lambda k: k.poly_eval(xs, exps, coeffs, p, deg, log, exp),
        "invert_permutation": lambda k: k.invert_permutation(perm),
        "fibers_injective": lambda k: k.fibers_injective(perm, lam, ctx.order),
    }
    if ctx.order <= 2 ** 12:
        out["interpolate"] = lambda k: k.interpolate(images, p, deg, log, exp)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--deg", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print rows as JSON")
    args = ap.parse_args(argv)

    ctx = make_field(args.p, args.deg)
    backends = kernels.backends()
    rows = []
    for name, fn in cases(ctx, np.random.default_rng(args.seed)).items():
        row = {"kernel": name}
        for bname, mod in backends.items():
            row[bname] = _best(lambda: fn(mod), args.repeat)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"] if row["cython"] else float("inf")
        rows.append(row)

    if args.json:
        json.dump({"p": args.p, "deg": args.deg, "rows": rows}, sys.stdout, indent=2)
        print()
        return 0
    print(f"GF({args.p}^{args.deg}), best of {args.repeat}; backends: {', '.join(backends)}")
    print(f"{'kernel':<20}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for r in rows:
        cy = f"{r['cython'] * 1e3:12.2f}" if "cython" in r else f"{'-':>12}"
        sp = f"{r['speedup']:10.1f}" if "speedup" in r else f"{'-':>10}"
        print(f"{r['kernel']:<20}{r['python'] * 1e3:12.2f}{cy}{sp}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
