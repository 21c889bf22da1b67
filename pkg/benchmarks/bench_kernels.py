"""Compare the compiled and pure-Python kernels.

Two workloads: raw Gaussian-integer matrix products at a few sizes, and the
homomorphism check ``rho(a) rho(b) == rho(a + b)`` on catalog pairs (run in
a subprocess per backend, since the backend is chosen at import).

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from addax._kernels import available_backends

RHO_SNIPPET = """
import random, time
from addax.action import rho
from addax.catalog import standard_pairs
from addax.scalar import random_scalar
rng = random.Random(1)
pairs = standard_pairs()
start = time.perf_counter()
for p in pairs:
    for _ in range(40):
        a = [random_scalar(rng, bound=5) for _ in range(p.n)]
        b = [random_scalar(rng, bound=5) for _ in range(p.n)]
        assert rho(p, a) @ rho(p, b) == rho(p, [x + y for x, y in zip(a, b)])
print(time.perf_counter() - start)
"""


def random_operands(n, rng, bound):
    return [[rng.randint(-bound, bound) for _ in range(n * n)] for _ in range(4)]


def bench_matmul(repeat):
    rng = random.Random(0)
    backends = available_backends()
    print(f"{'size':>6} {'entries':>8} " + " ".join(f"{b:>12}" for b in backends) + "  speedup")
    for n, bound in ((8, 10**3), (16, 10**3), (32, 10**3), (16, 2**40)):
        ar, ai, br, bi = random_operands(n, rng, bound)
        times = {}
        for name, mod in backends.items():
            t = timeit.Timer(lambda: mod.gauss_matmul(ar, ai, br, bi, n, n, n))
            loops, _ = t.autorange()
            times[name] = min(t.repeat(repeat, loops)) / loops
        row = " ".join(f"{times[b] * 1e6:10.1f}us" for b in backends)
        speed = (f"{times['python'] / times['cython']:6.1f}x" if "cython" in times else "   n/a")
        print(f"{n:>6} {'2^40' if bound > 10**3 else '1e3':>8} {row}  {speed}")


def bench_rho():
    print("\nrho homomorphism check, 16 pairs x 40 samples:")
    for name, flag in (("cython", "0"), ("python", "1")):
        env = dict(os.environ, ADDAX_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", RHO_SNIPPET], env=env,
                             capture_output=True, text=True, check=True)
        print(f"  {name:>7}: {float(out.stdout):.3f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    bench_matmul(args.repeat)
    bench_rho()


if __name__ == "__main__":
    main()
