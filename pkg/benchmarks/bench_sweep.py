"""Compare the compiled and pure-Python low-weight sweep kernels.

    python benchmarks/bench_sweep.py [--repeat 3] [--threads 4]
"""
import argparse
import time

from gqlrc import sweep
from gqlrc.codes import gq_code
from gqlrc.gq import build_gq

CASES = [
    ("Q(4,2) w=3", "te-conic", 2, 1, 3),
    ("Q(5,2) w=3", "te-ovoid", 2, 1, 3),
    ("Q(4,3) w=4", "te-conic", 3, 1, 4),
    ("T2*(O) q=4 w=4", "t2star", 4, 1, 4),
    ("H(3,4) w=5", "h3", 4, 1, 5),
    ("T(E) 85pt w=5", "te-conic", 2, 2, 5),
]


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args(argv)

    backends = ["python"] + (["compiled"] if sweep.BACKEND == "compiled" else [])
    print(f"{'case':<18}{'words':>7}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for label, kind, q, n, w in CASES:
        code = gq_code(build_gq(kind, q, n))
        cols = code.syndrome_columns
        row, results = [], []
        for b in backends:
            t, words = best_time(lambda: sweep.words_of_weight(cols, code.p, w, args.threads, b), args.repeat)
            row.append(t)
            results.append(words)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        speed = f"{row[0] / row[-1]:>9.1f}x" if len(row) > 1 else f"{'-':>10}"
        print(f"{label:<18}{len(results[0]) * (code.p - 1):>7}" + "".join(f"{t:>11.3f}s" for t in row) + speed)


if __name__ == "__main__":
    main()
