"""Benchmark the compiled scalar kernel against the pure-Python fallback.

Runs each workload twice in subprocesses (SLH2_PURE=1 forces the pure
kernel) so that import-time backend selection is exercised exactly the
way users hit it.  Workloads are the hot paths of the package: D-matrix
construction with scheme cross-check, a corepresentation suite, and a
slice of the Fock-oracle homomorphism check.

Usage: python benchmarks/bench_kernel.py [--quick]
"""

import argparse
import os
import subprocess
import sys

WORKLOADS = {
    "dmatrix 2j=6 ordered1=ordered2": (
        "from slh2.dfun import dmatrix, ORDERED1, ORDERED2\n"
        "a = dmatrix(6, ORDERED1, 'sl'); b = dmatrix(6, ORDERED2, 'sl')\n"
        "assert a.entries == b.entries\n"
    ),
    "corep suite 2j<=4": (
        "from slh2.hopfcheck import check_corep\n"
        "for twoj in range(5): assert check_corep(twoj).ok\n"
    ),
    "recurrences 2j<=4": (
        "from slh2.hopfcheck import recurrence_check, RECURRENCES\n"
        "for twoj in (1,2,3,4):\n"
        "    for w in RECURRENCES: assert recurrence_check(w, twoj).ok\n"
    ),
    "fock homomorphism 60 words": (
        "from slh2.fock import homomorphism_check\n"
        "assert homomorphism_check(nmax=4, words=60).ok\n"
    ),
    "scalar kernel 150k ops": (
        "from slh2.kernel import rad_mul, rad_add\n"
        "from slh2._rat import Q\n"
        "a = {1: {(0, 0): Q(3, 2), (1, 0): Q(-1, 3)}, 2: {(2, 0): Q(5, 7)}}\n"
        "b = {1: {(1, 0): Q(1, 2)}, 3: {(0, 0): Q(2), (2, 1): Q(-4, 5)}}\n"
        "acc = {}\n"
        "for _ in range(150000): acc = rad_add(acc, rad_mul(a, b))\n"
    ),
}


def run_one(body, pure):
    env = dict(os.environ)
    env.pop("SLH2_PURE", None)
    if pure:
        env["SLH2_PURE"] = "1"
    code = (
        "import time, slh2\n"
        f"expected = {'pure' if pure else 'cython'!r}\n"
        "t0 = time.perf_counter()\n"
        + body
        + "print(slh2.KERNEL_BACKEND, time.perf_counter() - t0)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    backend, elapsed = out.stdout.split()
    return backend, float(elapsed)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="run a subset")
    args = parser.parse_args()
    names = list(WORKLOADS)
    if args.quick:
        names = names[:2]
    print(f"{'workload':38s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}")
    for name in names:
        body = WORKLOADS[name]
        backend_c, t_c = run_one(body, pure=False)
        backend_p, t_p = run_one(body, pure=True)
        if backend_c != "cython":
            note = "(extension not built; both runs pure)"
            print(f"{name:38s} {t_p:8.2f}s {t_c:8.2f}s {note}")
        else:
            print(f"{name:38s} {t_p:8.2f}s {t_c:8.2f}s {t_p / t_c:7.2f}x")


if __name__ == "__main__":
    main()
