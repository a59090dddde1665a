"""Compare the compiled and numpy implementations of the propagation kernel.

    python3 benchmarks/bench_kernels.py [--repeat 20] [--substeps 8192 32768]
"""
import argparse
import timeit

import numpy as np

from zetafloquet import _backend
from zetafloquet.floquet import propagate_period
from zetafloquet.measurement import measure_point
from zetafloquet.waveform import synthesize


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--substeps", type=int, nargs="+", default=[4096, 8192, 32768])
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if _backend.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled extension not built; timing the numpy fallback only")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<28}{'N':>8}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}")
    for n in args.substeps:
        hx, hy, hz = rng.normal(size=(3, n))
        times = []
        for b in backends:
            fn = _backend.ordered_product_for(b)
            times.append(best_of(lambda: fn(hx, hy, hz, 1e-3), args.repeat))
        speed = f"{times[0] / times[-1]:>9.2f}x" if len(times) > 1 else ""
        print(f"{'su2_ordered_product':<28}{n:>8}" + "".join(f"{t * 1e3:>12.3f}ms" for t in times) + speed)

    w = synthesize(16.0, 5.0)
    times = [best_of(lambda: propagate_period(w, backend=b), args.repeat) for b in backends]
    speed = f"{times[0] / times[-1]:>9.2f}x" if len(times) > 1 else ""
    print(f"{'propagate_period (E=16)':<28}{w.spec.substeps:>8}"
          + "".join(f"{t * 1e3:>12.3f}ms" for t in times) + speed)
    if len(backends) > 1:
        Ua = propagate_period(w, backend="python").U
        Ub = propagate_period(w, backend="cython").U
        print(f"max |U_python - U_cython| = {np.max(np.abs(Ua - Ub)):.2e}")

    t_point = best_of(lambda: measure_point(16.0, 5.0), max(3, args.repeat // 4))
    print(f"measure_point end to end ({_backend.BACKEND}): {t_point * 1e3:.1f}ms")


if __name__ == "__main__":
    main()
