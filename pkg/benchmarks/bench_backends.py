"""Compare the compiled mod-p kernel against the pure-Python fallback on the
workloads that dominate the verification suites.

Run:  python3 benchmarks/bench_backends.py [--samples N]
(the compiled extension must be built; the pure twin is always available)
"""

import argparse
import random
import time


def _workloads(samples):
    from brownalg.albert import split_albert
    from brownalg.brown import BrownAlgebra
    from brownalg.cayley import CDAlgebra
    from brownalg.fields import Fp
    from brownalg import linalg

    field = Fp(7)
    oct8 = CDAlgebra.split_octonions(field)
    alb = split_albert(field)
    bro = BrownAlgebra(alb)
    rng = random.Random(0)
    oct_pairs = [(oct8.sample(rng).coords, oct8.sample(rng).coords) for _ in range(samples * 10)]
    alb_pairs = [(alb.sample(rng).coords, alb.sample(rng).coords) for _ in range(samples * 2)]
    alb_elems = [alb.sample(rng).coords for _ in range(max(1, samples // 4))]
    bro_mats = [bro.varpi().matrix for _ in range(2)]

    def bench_oct_mul():
        for x, y in oct_pairs:
            oct8.mul_raw(x, y)

    def bench_albert_jmul():
        for x, y in alb_pairs:
            alb.jmul_raw(x, y)

    def bench_uop_matrix():
        for x in alb_elems:
            alb.uop_matrix(x)

    def bench_rref56():
        for m in bro_mats:
            linalg.nullspace(m, field)

    return [
        (f"octonion products x{len(oct_pairs)}", bench_oct_mul),
        (f"Albert Jordan products x{len(alb_pairs)}", bench_albert_jmul),
        (f"27x27 U-operator matrices x{len(alb_elems)}", bench_uop_matrix),
        ("56x56 nullspace x2", bench_rref56),
    ]


def _run_in_mode(pure, samples):
    import os
    import subprocess
    import sys

    env = dict(os.environ)
    if pure:
        env["BROWNALG_PURE"] = "1"
    else:
        env.pop("BROWNALG_PURE", None)
    out = subprocess.run(
        [sys.executable, __file__, "--single", "--samples", str(samples)],
        capture_output=True,
        text=True,
        env=env,
    )
    if out.returncode:
        raise RuntimeError(out.stderr)
    return out.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--single", action="store_true", help="internal: run in-process")
    args = parser.parse_args()

    if args.single:
        from brownalg.kernels import BACKEND

        for name, fn in _workloads(args.samples):
            start = time.perf_counter()
            fn()
            print(f"{BACKEND}\t{name}\t{time.perf_counter() - start:.4f}")
        return

    print(f"workload timings (seconds), samples = {args.samples}")
    rows = {}
    for pure in (False, True):
        for line in _run_in_mode(pure, args.samples).splitlines():
            backend, name, secs = line.split("\t")
            rows.setdefault(name, {})[backend] = float(secs)
    width = max(len(n) for n in rows)
    print(f"{'workload':<{width}}  {'compiled':>9}  {'pure':>9}  speedup")
    for name, row in rows.items():
        comp = row.get("compiled")
        pure = row.get("pure")
        if comp is None:
            print(f"{name:<{width}}  {'n/a':>9}  {pure:>9.4f}  (extension not built)")
        else:
            print(f"{name:<{width}}  {comp:>9.4f}  {pure:>9.4f}  {pure / comp:>6.1f}x")


if __name__ == "__main__":
    main()
