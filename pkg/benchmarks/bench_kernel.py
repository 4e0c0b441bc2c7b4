"""Compare the compiled and pure-Python reduction kernels on Groebner workloads.

    python benchmarks/bench_kernel.py [--repeat 3] [--json out.json]
"""

import argparse
import json
import time

from csgin import GF, BlockRing, Ideal
from csgin.closure import jhom_saturation
from csgin.edge import binomial_edge_ideal, complete_graph, cycle_graph
from csgin.gin import BlockChange
from csgin.kernel import available_backends
from csgin.verify import closure_instances, block33_ideal


def generic_minors(rows: int, cols: int) -> Ideal:
    R = BlockRing([cols] * rows, field=GF())
    X = [[R.gen(R.var_index(i, j)) for j in range(cols)] for i in range(rows)]
    gens = [
        X[a][c] * X[b][d] - X[a][d] * X[b][c]
        for a in range(rows) for b in range(a + 1, rows) for c in range(cols) for d in range(c + 1, cols)
    ]
    return Ideal(R, gens)


def workloads():
    yield "block33 in random coordinates", BlockChange.random(block33_ideal(GF()).ring, 1).apply(block33_ideal(GF()))
    yield "2-minors 3x4", generic_minors(3, 4)
    yield "2-minors 3x4, random coordinates", BlockChange.random(generic_minors(3, 4).ring, 2).apply(generic_minors(3, 4))
    yield "2-minors 4x4, random coordinates", BlockChange.random(generic_minors(4, 4).ring, 2).apply(generic_minors(4, 4))
    for G, name in ((cycle_graph(6), "C6"), (complete_graph(5), "K5"), (cycle_graph(8), "C8")):
        J = binomial_edge_ideal(G)
        yield f"edge ideal {name}, random coordinates", BlockChange.random(J.ring, 3).apply(J)
    Vs = closure_instances(0, 6)
    yield "six closure ideals", [jhom_saturation(V) for V in Vs]


def time_backend(work, backend: str, repeat: int) -> float:
    items = work if isinstance(work, list) else [work]
    best = float("inf")
    for _ in range(repeat):
        fresh = [Ideal(I.ring, I.gens) for I in items]
        t0 = time.perf_counter()
        for I in fresh:
            I.groebner(backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args()
    backends = available_backends()
    rows = []
    print(f"{'workload':42s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, work in workloads():
        times = {b: time_backend(work, b, args.repeat) for b in backends}
        line = f"{name:42s}" + "".join(f"{times[b]:11.4f}s" for b in backends)
        if "cython" in times:
            line += f"{times['python'] / times['cython']:11.1f}x"
        print(line)
        rows.append({"workload": name, **{f"{b}_s": round(t, 6) for b, t in times.items()}})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
