"""Command-line front end.

    qconv transform IN OUT [--roots R] [--inverse] [--fast]
    qconv convolve F G OUT [--roots R] [--method M] [--check]
    qconv verify [--seed S] [--size N] [--tolerance T] [--suite NAME]
    qconv bench [--sizes 8,16,32] [--roots R] [--repeat K]

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from . import conv, io, sampling, verify
from .errors import QconvError, RootsNotEqual
from .qft import qft
from .terms import TABLES, corrupt

METHODS = ("spatial", "mustard", "thm31", "thm32", "thm41", "spectral51")
BENCH_METHODS = ("spatial", "thm41_naive", "thm41_cached")
EXIT_FAIL = 1
EXIT_INPUT = 2


def _err(msg: str) -> None:
    print(f"qconv: {msg}", file=sys.stderr)


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _sizes(text: str) -> list[int]:
    try:
        return [_positive_int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


# -- subcommands ---------------------------------------------------------------

def cmd_transform(args) -> int:
    f = io.read_any(args.input)
    out = qft(f, args.roots, inverse=args.inverse, fast=args.fast)
    io.write_field(args.output, out)
    print(f"transform {f.n1}x{f.n2} inverse={int(args.inverse)} fast={int(args.fast)}")
    return 0


def convolve_fields(f, g, roots, method: str):
    if method == "spatial":
        return conv.classical_convolve(f, g)
    if method == "mustard":
        return conv.mustard_convolve(f, g, roots)
    if method == "thm31":
        if not roots.is_single():
            raise RootsNotEqual("method thm31 needs a single root (mu == nu)")
        return conv.classical_via_mustard_equal(f, g, roots.mu)
    if method == "thm32":
        return conv.classical_via_mustard_perp(f, g, roots)
    if method == "thm41":
        return conv.classical_via_mustard_general(f, g, roots)
    if method == "spectral51":
        return qft(conv.convolution_spectrum(f, g, roots), roots, inverse=True)
    raise ValueError(f"unknown method {method!r}")


def cmd_convolve(args) -> int:
    f, g = io.read_any(args.f), io.read_any(args.g)
    out = convolve_fields(f, g, args.roots, args.method)
    io.write_any(args.output, out)
    line = f"convolve {f.n1}x{f.n2} method={args.method}"
    if args.check:
        dev = out.max_abs_diff(conv.classical_convolve(f, g))
        line += f" max_dev={dev:.6e}"
    print(line)
    return 0


def _tables(spec: str | None):
    if not spec:
        return TABLES
    try:
        name, index = spec.split(":")
        tables = dict(TABLES)
        tables[name] = corrupt(TABLES[name], int(index))
    except (ValueError, KeyError, IndexError):
        raise argparse.ArgumentTypeError(f"bad --corrupt-term {spec!r}") from None
    return tables


def cmd_verify(args) -> int:
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    results = verify.run(suites, seed=args.seed, size=args.size,
                         tolerance=args.tolerance, tables=_tables(args.corrupt_term))
    failed = [c for c in results if not c.passed(args.tolerance)]
    for c in results:
        print(c.line(args.tolerance))
    print(f"{len(results) - len(failed)}/{len(results)} identities within {args.tolerance:g}")
    for c in failed:
        _err(f"FAILED {c.suite}: {c.name}" + (f" (suspect term {c.suspect})" if c.suspect else ""))
    return EXIT_FAIL if failed else 0


def _time_ns(fn, repeat: int) -> tuple[int, object]:
    result, total = None, 0
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        result = fn()
        total += time.perf_counter_ns() - t0
    return total // repeat, result


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["size", "method", "mean_ns", "max_err"])
    roots = args.roots
    for n in args.sizes:
        rng = np.random.default_rng([args.seed, n])
        f, g = sampling.random_field(rng, n), sampling.random_field(rng, n)
        runs = {
            "spatial": lambda: conv.classical_convolve(f, g),
            "thm41_naive": lambda: conv.classical_via_mustard_general(f, g, roots, mode="naive"),
            "thm41_cached": lambda: conv.classical_via_mustard_general(f, g, roots, mode="cached"),
        }
        reference = None
        for method in BENCH_METHODS:
            mean_ns, out = _time_ns(runs[method], args.repeat)
            if reference is None:
                reference = out
            writer.writerow([n, method, mean_ns, f"{out.max_abs_diff(reference):.6e}"])
        sys.stdout.flush()
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qconv", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    roots_help = "root pair: preset (equal-i, perp-ij, gray-line) or 'b,c,d[;b,c,d]'"

    t = sub.add_parser("transform", help="left qFT of a QF01 or PPM field")
    t.add_argument("input")
    t.add_argument("output")
    t.add_argument("--roots", default="perp-ij", help=roots_help)
    t.add_argument("--inverse", action="store_true")
    t.add_argument("--fast", action="store_true", help="FFT path (power-of-two sizes)")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("convolve", help="classical convolution by one of several methods")
    c.add_argument("f")
    c.add_argument("g")
    c.add_argument("output", help="*.ppm writes an image, anything else QF01")
    c.add_argument("--roots", default="perp-ij", help=roots_help)
    c.add_argument("--method", choices=METHODS, default="spatial")
    c.add_argument("--check", action="store_true", help="report max deviation from spatial")
    c.set_defaults(func=cmd_convolve)

    v = sub.add_parser("verify", help="run the identity suites")
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--size", type=_positive_int, default=8)
    v.add_argument("--tolerance", type=_positive_float, default=1e-9)
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    v.add_argument("--corrupt-term", default=None, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time spatial vs expansion-based convolution")
    b.add_argument("--sizes", type=_sizes, default=[8, 16, 32])
    b.add_argument("--roots", default="1,0,0;1,1,0", help=roots_help)
    b.add_argument("--repeat", type=_positive_int, default=3)
    b.add_argument("--seed", type=_seed, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "roots"):
            args.roots = io.parse_roots(args.roots)
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        _err(str(exc))
        return EXIT_INPUT
    except (QconvError, OSError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
