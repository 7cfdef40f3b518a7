"""Compare the compiled polynomial kernels with the pure-Python fallback.

Two measurements:

* micro: ``gcd``, ``mul`` and ``rf_add`` on random integer polynomials,
  calling each kernel module directly;
* end to end: a fixed Q(t) workload (relations, canonical forms, joins)
  run in a subprocess once per backend, selected through
  ``ARCHCLASS_PURE_PYTHON``.

Usage: ``python benchmarks/bench_kernels.py [--repeat N]``
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from archclass import _polyz as pure

try:
    from archclass import _polyz_c as compiled
except ImportError:
    compiled = None

WORKLOAD = """
import time
from archclass import KERNEL_BACKEND, QT, archimedean_canonical_form, join, sim
from archclass.randmat import random_bibounded, random_matrix, rng_for
rng = rng_for(7)
start = time.perf_counter()
for _ in range(40):
    n, m = rng.randint(1, 3), rng.randint(1, 3)
    A = random_matrix(rng, QT, m, n)
    B = random_matrix(rng, QT, rng.randint(1, 3), n)
    sim(random_bibounded(rng, QT, m) @ A, A)
    join(A, B)
    if not A.is_zero():
        archimedean_canonical_form(A)
print(KERNEL_BACKEND, time.perf_counter() - start)
"""


def random_poly(rng, degree, height):
    coeffs = [rng.randint(-height, height) for _ in range(degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    if coeffs[0] == 0:
        coeffs[0] = 1
    return tuple(coeffs)


def micro(module, cases, repeat):
    timings = {}
    timings["mul"] = min(timeit.repeat(
        lambda: [module.mul(a, b) for a, b, _, _ in cases], number=1, repeat=repeat))
    timings["gcd"] = min(timeit.repeat(
        lambda: [module.gcd(module.mul(a, c), module.mul(b, c)) for a, b, c, _ in cases],
        number=1, repeat=repeat))
    timings["rf_add"] = min(timeit.repeat(
        lambda: [module.rf_add(0, a, d, 1, b, c) for a, b, c, d in cases],
        number=1, repeat=repeat))
    return timings


def end_to_end(pure_python):
    env = dict(os.environ)
    env.pop("ARCHCLASS_PURE_PYTHON", None)
    if pure_python:
        env["ARCHCLASS_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cases", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(1)
    cases = [tuple(random_poly(rng, rng.randint(2, 8), 20) for _ in range(4))
             for _ in range(args.cases)]

    print(f"micro benchmarks ({args.cases} cases, best of {args.repeat})")
    base = micro(pure, cases, args.repeat)
    fast = micro(compiled, cases, args.repeat) if compiled else None
    for name, t in base.items():
        line = f"  {name:8s} python {t * 1e3:8.2f} ms"
        if fast:
            line += f"   cython {fast[name] * 1e3:8.2f} ms   speedup {t / fast[name]:5.2f}x"
        print(line)
    if not fast:
        print("  compiled kernels not built; only the fallback was measured")

    print("end-to-end Q(t) workload")
    results = [end_to_end(True)] + ([end_to_end(False)] if compiled else [])
    for backend, t in results:
        print(f"  {backend:8s} {t:8.3f} s")
    if len(results) == 2:
        print(f"  speedup  {results[0][1] / results[1][1]:8.2f}x")


if __name__ == "__main__":
    main()
