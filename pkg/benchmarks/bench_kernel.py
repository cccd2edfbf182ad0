"""Compare the compiled term kernel with the pure-Python fallback.

Each backend runs in its own subprocess so the module-level backend choice
is honoured.  Usage: ``python3 benchmarks/bench_kernel.py [--repeat N]``.
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import invcheck
from invcheck.forms import build
from invcheck.polyring import get_space
from invcheck.identities import run_catalog

def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

def sparse_product():
    w6, w4 = build("W6"), build("W4")
    return (w6 * w6 * w4 - w4 ** 4).num_terms()

def dense_product():
    s = sum(get_space("w6").gens())
    return (s ** 6 * (s + 1) ** 6).num_terms()

repeat = int(__import__("sys").argv[1])
out = {
    "backend": invcheck.BACKEND,
    "sparse_product_s": best(sparse_product, repeat),
    "dense_product_s": best(dense_product, repeat),
    "catalog_expand_s": best(lambda: run_catalog("all", "expand"), repeat),
}
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["INVCHECK_PURE_PYTHON"] = "1"
    else:
        env.pop("INVCHECK_PURE_PYTHON", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled kernel not built; both runs used the fallback")
    print(f"{'workload':20s} {fast['backend']:>10s} {'python':>10s} {'speedup':>8s}")
    for key in ("sparse_product_s", "dense_product_s", "catalog_expand_s"):
        a, b = fast[key], slow[key]
        print(f"{key[:-2]:20s} {a:10.3f} {b:10.3f} {b / a:8.2f}x")


if __name__ == "__main__":
    main()
