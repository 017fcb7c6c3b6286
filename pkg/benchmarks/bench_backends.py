"""Compare the compiled and pure-numpy kernel backends.

    python benchmarks/bench_backends.py --sizes 8,16,32,64 --repeat 5

Prints CSV: kernel,size,backend,mean_ns,max_err (error vs the numpy backend).
"""
import argparse
import csv
import sys
import time

import numpy as np

from qconv import _backend


def _time(fn, repeat):
    best = None
    total = 0
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        best = fn()
        total += time.perf_counter_ns() - t0
    return total // repeat, best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    p.add_argument("--sizes", default="8,16,32,64")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--threads", type=int, default=1)
    args = p.parse_args(argv)

    backends = _backend.available()
    if "cython" not in backends:
        print("compiled backend not built; timing numpy only", file=sys.stderr)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["kernel", "size", "backend", "mean_ns", "max_err"])
    rng = np.random.default_rng(0)
    for n in (int(s) for s in args.sizes.split(",")):
        f = rng.uniform(-1, 1, (n, n, 4))
        g = rng.uniform(-1, 1, (n, n, 4))
        e = rng.uniform(-1, 1, (n, n, 4))
        calls = {
            "cyclic_convolve": lambda k: k.cyclic_convolve(f, g, args.threads),
            "cyclic_correlate": lambda k: k.cyclic_correlate(f, g, args.threads),
            "qmatmul_left": lambda k: k.qmatmul_left(e, f),
        }
        for kernel, call in calls.items():
            ref = None
            for name in ["python"] + [b for b in backends if b != "python"]:
                mean_ns, res = _time(lambda: call(_backend.get(name)), args.repeat)
                ref = res if ref is None else ref
                out.writerow([kernel, n, name, mean_ns, f"{np.max(np.abs(res - ref)):.3e}"])


if __name__ == "__main__":
    main()
