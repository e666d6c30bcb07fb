"""Compare the compiled and pure Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Every workload runs once per backend with all memo caches cleared first, so
both backends do the same arithmetic.
"""
import argparse
import importlib
import time

from polyrep import _kernel
from polyrep.sympoly import MPoly

MODULES = ("sympoly", "combinat", "kostka", "coinvariants", "currentaction", "thetafunctor", "weylchar")


def clear_caches() -> None:
    for name in MODULES:
        mod = importlib.import_module(f"polyrep.{name}")
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def raw_products():
    x = [MPoly.var(6, k) for k in range(1, 7)]
    s = x[0] + x[1].scale(2) - x[2] + x[3] + x[4].scale(3) - x[5]
    return len((s**6 * (s + 1) ** 6).terms)


def coinvariants():
    from polyrep.coinvariants import coinv_graded_dim_linear

    return coinv_graded_dim_linear((5, 2, 1, 1), (3, 1, 2, 3))


def current_relations():
    from polyrep.currentaction import verify_current_relations

    return verify_current_relations(3, 3, 2, 1, "signed").passed


def theta_relations():
    from polyrep.thetafunctor import verify_theta

    return verify_theta(3, 3, max_exp=2, convention="signed").passed


WORKLOADS = {
    "raw products": raw_products,
    "coinvariant quotient": coinvariants,
    "current relations": current_relations,
    "theta relations": theta_relations,
}


def time_once(fn):
    clear_caches()
    start = time.perf_counter()
    result = fn()
    return time.perf_counter() - start, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernel.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'workload':<22}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, fn in WORKLOADS.items():
        best, results = {}, {}
        for b in backends:
            _kernel.use_backend(b)
            runs = [time_once(fn) for _ in range(args.repeat)]
            best[b] = min(t for t, _ in runs)
            results[b] = runs[0][1]
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        row = f"{label:<22}" + "".join(f"{best[b]:>11.3f}s" for b in backends)
        if len(backends) > 1:
            row += f"{best['python'] / best['cython']:>11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
