"""Compare the numba and numpy GF(p) kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times rref, spin and the exhaustive closure sweep on seeded random inputs,
after one warm-up call per backend (so numba compile time is excluded).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tpalg import _kernels


def cases(rng):
    p = 3
    yield "rref 60x60", _kernels.rref_mod, (rng.integers(0, p, (60, 60)), p)
    ops = rng.integers(0, p, (6, 40, 40))
    gens = np.eye(40, dtype=np.int64)[:1]
    yield "spin n=40, 6 ops", _kernels.spin_mod, (gens, ops, p)
    ops6 = (rng.random((4, 6, 6)) < 0.2) * rng.integers(1, p, (4, 6, 6))
    yield "exhaustive n=6 (728 vectors)", _kernels.exhaustive_min_closure, (ops6, p, 6, p**6)
    ops8 = (rng.random((4, 8, 8)) < 0.15) * rng.integers(1, p, (4, 8, 8))
    yield "exhaustive n=8 (6560 vectors)", _kernels.exhaustive_min_closure, (ops8, p, 8, p**8)


def best_time(fn, args, repeat):
    fn(*args)  # warm-up / compile
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    old = _kernels.backend()
    print(f"{'kernel':32s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    try:
        for name, fn, fargs in cases(np.random.default_rng(0)):
            row = []
            for b in backends:
                _kernels.set_backend(b)
                row.append(best_time(fn, fargs, args.repeat))
            line = f"{name:32s}" + "".join(f"{t * 1e3:10.2f}ms" for t in row)
            if len(row) == 2:
                line += f"{row[0] / row[1]:11.1f}x"
            print(line)
    finally:
        _kernels.set_backend(old)


if __name__ == "__main__":
    main()
