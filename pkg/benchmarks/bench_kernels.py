"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends receive identical inputs; outputs are checked for equality
before timings are reported.
"""

from __future__ import annotations

import argparse
import time

from harary_lab import _pykernels
from harary_lab.graphs import build_named, parse_named
from harary_lab.harary import _down_closed, block_validity
from harary_lab.properties import builtin

try:
    from harary_lab import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None


def partition_case(prop, graph):
    P = builtin(*prop)
    valid = block_validity(P, graph)
    prune = _down_closed(valid, graph.n)
    return lambda impl: impl.partition_counts(valid, graph.n, prune)


def coloring_case(prop, graph, k):
    valid = block_validity(builtin(*prop), graph)
    return lambda impl: impl.coloring_count(valid, graph.n, k)


def edge_case(name, graph):
    eu = [u for u, _ in graph.edges]
    ev = [v for _, v in graph.edges]
    return lambda impl: getattr(impl, name)(graph.n, eu, ev)


def cases(quick: bool):
    n = 9 if quick else 11
    yield f"partitions connected C{n} (no pruning)", partition_case(("connected",), build_named("C", n))
    yield f"partitions induced-free P3 on C{n + 1} (pruned)", partition_case(("induced-free", "P3"), build_named("C", n + 1))
    yield f"partitions induced-free K3 on P{n}", partition_case(("induced-free", "K3"), build_named("P", n))
    yield "colourings edgeless C8, k = 4", coloring_case(("edgeless",), build_named("C", 8), 4)
    yield "xi state sum K5", edge_case("xi_counts", parse_named("K5"))
    yield "Tutte state sum K2,4" if quick else "Tutte state sum K3,4", edge_case(
        "tutte_counts", parse_named("K2,4" if quick else "K3,4")
    )
    yield "matchings K8", edge_case("matching_counts", parse_named("K8"))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled backend not built; nothing to compare")
        return 1
    print(f"{'case':<42} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for label, run in cases(args.quick):
        tc, oc = best_of(lambda: run(_ckernels), args.repeat)
        tp, op = best_of(lambda: run(_pykernels), args.repeat)
        norm = lambda o: dict(o) if isinstance(o, dict) else (list(o) if not isinstance(o, int) else o)  # noqa: E731
        if norm(oc) != norm(op):
            print(f"{label}: backends disagree")
            return 1
        print(f"{label:<42} {tc:>10.4f} {tp:>10.4f} {tp / max(tc, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
