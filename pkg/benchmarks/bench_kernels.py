"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the RK4 Liouville integrator on the 4x4 preset problem, the batched
pairwise-diagonal sum used by the monotonicity sweep, and a full ``evolve``
call, and checks that the two backends agree.
"""

import argparse
import math
import timeit

import numpy as np

from coherence_lab import kernels
from coherence_lab.pulsesim import PulseConfig, QubitParams, two_qubit_hamiltonian


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--steps", type=int, default=4000)
    args = parser.parse_args()

    cfg = PulseConfig(QubitParams(0.5), QubitParams(1.0), interacting=True)
    H = two_qubit_hamiltonian(cfg)
    rho0 = np.zeros((4, 4), dtype=complex)
    rho0[3, 3] = 1.0
    dt = 4 * math.pi / args.steps
    pops = np.random.default_rng(0).dirichlet(np.ones(8), size=10_000)

    print(f"selected backend: {kernels.BACKEND}; available: {', '.join(sorted(kernels.BACKENDS))}")
    results = {}
    timings = {}
    for name, mod in sorted(kernels.BACKENDS.items()):
        t_rk4 = _best(lambda: mod.rk4_liouville(rho0, H, dt, args.steps), args.repeat)
        t_pdd = _best(lambda: mod.pdd_pair_sums(pops), args.repeat)
        results[name] = (mod.rk4_liouville(rho0, H, dt, args.steps), mod.pdd_pair_sums(pops))
        timings[name] = (t_rk4, t_pdd)
        print(f"{name:>7}: rk4 {args.steps} steps {t_rk4 * 1e3:8.2f} ms | pdd 10000x8 {t_pdd * 1e3:8.2f} ms")

    if len(results) == 2:
        (ra, pa), (rb, pb) = results["cython"], results["python"]
        print(f"max |rk4 difference| {np.max(np.abs(ra - rb)):.2e}, max |pdd difference| {np.max(np.abs(pa - pb)):.2e}")
        (ca, cb), (pa_t, pb_t) = timings["cython"], timings["python"]
        print(f"speedup python/cython: rk4 {pa_t / ca:.1f}x, pdd {pb_t / cb:.1f}x")
    else:
        print("compiled backend not built; run `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
