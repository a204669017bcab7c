"""Compare the compiled kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter, once with the default backend and
once with BRAIDLAB_PURE_PYTHON=1, and the best of several repeats is reported.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "ratfunc arithmetic": """
from braidlab.exactla import V
x = V
for k in range(1, 15):
    x = (x * (V + k) + 1 / (V ** 2 - k)) / (V + 1)
""",
    "uq L(2) braiding": """
from braidlab.uqsl2 import build_cf_braiding, build_simple_module
build_cf_braiding(build_simple_module(2))
""",
    "uq L(2) report D=2": """
from braidlab.uqsl2 import build_simple_module, uq_report
uq_report(build_simple_module(2), D=2)
""",
    "rational detection": """
import random
from braidlab.braidcore.instances import random_right_triangular
from braidlab.triangular import detect_triangular
rng = random.Random(7)
for _ in range(6):
    b, _ = random_right_triangular(rng, 3)
    detect_triangular(b, "right")
""",
}

TIMER = """
import time, sys
from braidlab.exactla import BACKEND
src = sys.stdin.read()
best = None
for _ in range({repeat}):
    t = time.perf_counter()
    exec(compile(src, "<workload>", "exec"), {{}})
    dt = time.perf_counter() - t
    best = dt if best is None else min(best, dt)
print(BACKEND, best)
"""


def time_workload(src, pure, repeat):
    env = dict(os.environ, BRAIDLAB_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", TIMER.format(repeat=repeat)], input=src, env=env,
                         capture_output=True, text=True, check=True)
    backend, secs = res.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print results as JSON")
    args = ap.parse_args()
    rows = []
    for name, src in WORKLOADS.items():
        fast_backend, fast = time_workload(src, False, args.repeat)
        _, slow = time_workload(src, True, args.repeat)
        rows.append({"workload": name, "backend": fast_backend, "compiled_s": fast, "python_s": slow,
                     "speedup": slow / fast if fast else None})
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'workload':<24}{'backend':>9}{'default s':>11}{'python s':>10}{'ratio':>7}")
    for r in rows:
        print(f"{r['workload']:<24}{r['backend']:>9}{r['compiled_s']:>11.3f}{r['python_s']:>10.3f}{r['speedup']:>7.2f}")


if __name__ == "__main__":
    main()
