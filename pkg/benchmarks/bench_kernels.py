"""Compare the compiled enumeration kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--vars 20] [--repeat 3]

Random 3-CNF clause masks and random PB rows are fed to both backends; the
outputs are checked for equality before the timings are reported.
"""

import argparse
import time

import numpy as np

from domproof import _pykernels, kernels


def _clauses(rng, n, m):
    pos = np.zeros(m, dtype=np.uint64)
    neg = np.zeros(m, dtype=np.uint64)
    for i in range(m):
        for v in rng.choice(n, size=3, replace=False):
            bit = np.uint64(1 << int(v))
            if rng.random() < 0.5:
                pos[i] |= bit
            else:
                neg[i] |= bit
    return pos, neg


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vars", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    n = args.vars

    # under-constrained, so the first model is not found at index 0 by luck
    pos, neg = _clauses(rng, n, int(3 * n))
    # a few PB rows with small coefficients
    coefs = np.ascontiguousarray(rng.integers(-5, 6, size=(4, n), dtype=np.int64))
    bounds = rng.integers(-3, 4, size=4, dtype=np.int64)

    cases = [
        ("cnf_table", lambda k: k.cnf_table(pos, neg, n)),
        ("first_cnf_model", lambda k: k.first_cnf_model(pos, neg, n)),
        ("pb_table", lambda k: k.pb_table(coefs, bounds, n)),
    ]
    print(f"backend in use: {kernels.BACKEND}; {n} variables, {1 << n} assignments")
    print(f"{'kernel':<16} {'compiled':>10} {'numpy':>10} {'speedup':>8}")
    for name, call in cases:
        fast, a = _best(lambda: call(kernels), args.repeat)
        slow, b = _best(lambda: call(_pykernels), args.repeat)
        same = np.array_equal(a, b) if isinstance(a, np.ndarray) else a == b
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<16} {fast * 1e3:>8.1f}ms {slow * 1e3:>8.1f}ms {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
