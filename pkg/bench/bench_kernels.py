"""Compare the pure-Python and compiled collapse kernels on the same inputs.

Run from the repository root after installing the package:

    python bench/bench_kernels.py
    python bench/bench_kernels.py --seeds 200 --labels 6

Every timing row also cross-checks that both kernels return identical
(status, certificate, nodes) triples; a mismatch aborts the run.
"""

import argparse
import time

from convexcodes.collapse import available_kernels
from convexcodes.complexes import order_complex, simplex_faces
from convexcodes.instances import dunce_hat, random_complex

MODES = {"collapse": 1, "strict": 2}


def run_search(mod, facets, mode, greedy):
    t0 = time.perf_counter()
    result = mod.search(tuple(facets), mode, 5_000_000, 0, greedy, {}, True)
    return result, time.perf_counter() - t0


def bench_instance(kernels, tag, facets, mode, greedy=0):
    row = {}
    baseline = None
    for name, mod in kernels.items():
        result, dt = run_search(mod, facets, mode, greedy)
        if baseline is None:
            baseline = result
        elif result != baseline:
            raise SystemExit(f"kernel disagreement on {tag}: {result} != {baseline}")
        row[name] = dt
    status, _, nodes = baseline
    verdict = {1: "Yes", 0: "No", -1: "Unknown"}[status]
    times = "  ".join(f"{name} {dt * 1e3:8.2f} ms" for name, dt in row.items())
    speedup = ""
    if "pure-python" in row and "compiled" in row and row["compiled"] > 0:
        speedup = f"  ({row['pure-python'] / row['compiled']:.1f}x)"
    print(f"{tag:32s} {verdict:7s} nodes={nodes:<7d} {times}{speedup}")
    return row


def bench_batch(kernels, seeds, labels, mode):
    totals = {name: 0.0 for name in kernels}
    instances = 0
    for seed in range(seeds):
        cx = random_complex(labels, seed)
        if cx.is_void:
            continue
        instances += 1
        baseline = None
        for name, mod in kernels.items():
            result, dt = run_search(mod, cx.facets, mode, 2)
            totals[name] += dt
            if baseline is None:
                baseline = result
            elif result != baseline:
                raise SystemExit(f"kernel disagreement on seed {seed}")
    times = "  ".join(f"{name} {dt * 1e3:8.1f} ms" for name, dt in totals.items())
    speedup = ""
    if "pure-python" in totals and "compiled" in totals and totals["compiled"] > 0:
        speedup = f"  ({totals['pure-python'] / totals['compiled']:.1f}x)"
    print(f"{instances} random complexes on {labels} labels: {times}{speedup}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=80, help="random instances to run")
    ap.add_argument("--labels", type=int, default=6, help="ambient labels for the batch")
    ap.add_argument("--engine", choices=sorted(MODES), default="strict")
    args = ap.parse_args()

    kernels = available_kernels()
    print("kernels:", ", ".join(kernels))
    if len(kernels) == 1:
        print("note: compiled kernel unavailable, timing pure-python only")
    mode = MODES[args.engine]

    bary3 = order_complex(simplex_faces([1, 2, 3]))
    bary4 = order_complex(simplex_faces([1, 2, 3, 4]))
    bench_instance(kernels, "subdivided solid triangle", bary3.facets, mode)
    bench_instance(kernels, "subdivided solid tetrahedron", bary4.facets, mode)
    bench_instance(kernels, "dunce hat", dunce_hat().facets, mode)
    bench_batch(kernels, args.seeds, args.labels, mode)


if __name__ == "__main__":
    main()
