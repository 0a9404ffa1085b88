"""Time the enumeration kernels with and without the compiled extension.

Runs the same workload twice in subprocesses, once as installed and once with
``ARGLAB_PURE=1``, then prints the per-task timings side by side.  Usage::

    python3 benchmarks/bench_kernels.py [--sizes 12,16,20] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def random_framework(rng: random.Random, n: int, density: float = 0.18):
    args = tuple(f"a{i}" for i in range(n))
    atts = [(x, y) for x in args for y in args if rng.random() < density]
    return args, atts


def worker(sizes: list[int], repeat: int, seed: int) -> dict[str, float]:
    from arglab import ArgumentFramework, Semantics, enumerate_extensions, enumerate_labelings
    from arglab._kernels import compiled

    rng = random.Random(seed)
    frameworks = [
        ArgumentFramework(*random_framework(rng, n)) for n in sizes for _ in range(repeat)
    ]
    timings: dict[str, float] = {"compiled": float(compiled())}
    tasks = [
        ("extensions/pr", lambda af: enumerate_extensions(af, Semantics.PR)),
        ("extensions/st", lambda af: enumerate_extensions(af, Semantics.ST)),
        ("extensions/co", lambda af: enumerate_extensions(af, Semantics.CO)),
        ("labelings/co", lambda af: enumerate_labelings(af, Semantics.CO)),
        ("extensions/gr", lambda af: enumerate_extensions(af, Semantics.GR)),
    ]
    for name, call in tasks:
        start = time.perf_counter()
        for af in frameworks:
            call(af)
        timings[name] = time.perf_counter() - start
    return timings


def run_mode(pure: bool, sizes: list[int], repeat: int, seed: int) -> dict[str, float]:
    env = dict(os.environ)
    env.pop("ARGLAB_PURE", None)
    if pure:
        env["ARGLAB_PURE"] = "1"
    out = subprocess.run(
        [
            sys.executable, os.path.abspath(__file__), "--worker",
            "--sizes", ",".join(map(str, sizes)),
            "--repeat", str(repeat), "--seed", str(seed),
        ],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="12,16,20", help="framework sizes, comma separated")
    parser.add_argument("--repeat", type=int, default=3, help="frameworks per size")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    opts = parser.parse_args()
    sizes = [int(s) for s in opts.sizes.split(",") if s]

    if opts.worker:
        json.dump(worker(sizes, opts.repeat, opts.seed), sys.stdout)
        return 0

    fast = run_mode(False, sizes, opts.repeat, opts.seed)
    slow = run_mode(True, sizes, opts.repeat, opts.seed)
    if not fast.pop("compiled"):
        print("note: compiled extension unavailable, comparing pure against itself")
    slow.pop("compiled")

    width = max(len(k) for k in fast)
    print(f"sizes={sizes} repeat={opts.repeat} seed={opts.seed}")
    print(f"{'task'.ljust(width)}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name, quick in fast.items():
        pure = slow[name]
        ratio = pure / quick if quick else float("inf")
        print(f"{name.ljust(width)}  {quick * 1e3:>8.2f}ms  {pure * 1e3:>8.2f}ms  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
