"""Compare the jit and pure-numpy kernels on the two hot paths.

Run:  python3 benchmarks/bench_backends.py --n 600 --k 3 --p 0.8 --repeat 3
"""

import argparse
import time

from domcount.engine import count_dominating_exact
from domcount.generate import erdos_renyi
from domcount.kernels import get_backend


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=600)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--p", type=float, default=0.8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = []
    for name in ("numba", "numpy"):
        try:
            get_backend(name)
            backends.append(name)
        except (ImportError, RuntimeError) as exc:
            print(f"{name}: unavailable ({exc})")
    results = {}

    print(f"n={args.n} k={args.k} p={args.p} seed={args.seed} "
          f"(best of {args.repeat})")
    for name in backends:
        # Warm-up outside the timer so jit compilation is not billed.
        erdos_renyi(16, args.p, seed=args.seed, backend=name)
        count_dominating_exact(
            erdos_renyi(16, args.p, seed=args.seed, backend=name), 2,
            backend=name,
        )

        t_gen, graph = best_of(
            args.repeat,
            lambda: erdos_renyi(args.n, args.p, seed=args.seed, backend=name),
        )
        t_cnt, res = best_of(
            args.repeat,
            lambda: count_dominating_exact(graph, args.k, backend=name),
        )
        results[name] = (graph, res.dominating)
        print(f"{name:>6}: generate {t_gen * 1e3:9.2f} ms   "
              f"count {t_cnt * 1e3:9.2f} ms   dominating={res.dominating}")

    if len(backends) == 2:
        g_a, c_a = results["numba"]
        g_b, c_b = results["numpy"]
        assert g_a == g_b, "backends generated different graphs"
        assert c_a == c_b, "backends disagree on the count"
        print("parity: graphs and counts identical across backends")


if __name__ == "__main__":
    main()
