"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--bound 500] [--repeat 3]
"""

import argparse
import importlib
import os
import subprocess
import sys
import timeit

from nument import _kernels_py


def time_rows(mod, bound, repeat):
    def system():
        for x in range(1, bound + 1):
            mod.system_row(x, bound, False, 1e-6)

    def divergence():
        for total in range(2, 121):
            mod.divergence_row(total, 1e-6)

    return (min(timeit.repeat(system, number=1, repeat=repeat)),
            min(timeit.repeat(divergence, number=1, repeat=repeat)))


def time_scan(backend, bound):
    env = dict(os.environ, NUMENT_PURE_PYTHON="1" if backend == "python" else "0")
    code = ("import time; from nument.search import scan_system; t = time.perf_counter(); "
            f"scan_system({bound}); print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bound", type=int, default=500)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": _kernels_py}
    try:
        backends["cython"] = importlib.import_module("nument._kernels")
    except ImportError:
        print("compiled kernels not built; timing the fallback only")

    print(f"{'backend':<8} {'system rows':>12} {'divergence rows':>16} {'scan_system':>12}")
    for name, mod in backends.items():
        sys_t, div_t = time_rows(mod, args.bound, args.repeat)
        scan_t = time_scan(name, args.bound)
        print(f"{name:<8} {sys_t:>11.3f}s {div_t:>15.3f}s {scan_t:>11.3f}s")


if __name__ == "__main__":
    main()
