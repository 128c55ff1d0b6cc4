"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py            # table
    python3 benchmarks/bench_kernels.py --json     # machine-readable
    python3 benchmarks/bench_kernels.py --quick    # smaller inputs

Each timing is the best of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import json
import random
import time

from unigraphs import _core
from unigraphs import catalog as cat
from unigraphs.classes import recognize
from unigraphs.graph import Graph
from unigraphs.iso import canonical_form, find_induced, is_free
from unigraphs.oracle import _extend_one, enumerate_graphs
from unigraphs.synthetic import synthetic_hereditary_sequence


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _random_graphs(count: int, n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.random()
        out.append(Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]))
    return out


def cases(quick: bool) -> dict:
    graphs12 = _random_graphs(60 if quick else 300, 12, 1)
    hosts = list(enumerate_graphs(7))
    forbidden = cat.HEREDITARY_UNIGRAPH_FORBIDDEN
    seed_classes = [g.to_graph6() for g in enumerate_graphs(5 if quick else 6)]
    sizes = (10 ** 4, 10 ** 5) if quick else (10 ** 4, 10 ** 5, 10 ** 6)
    seqs = {n: synthetic_hereditary_sequence(n, seed=7) for n in sizes}

    out = {
        f"canonical_form x{len(graphs12)} (n=12)": lambda: [canonical_form(g) for g in graphs12],
        f"forbidden scan x{len(hosts)} (n=7)": lambda: [is_free(g, forbidden) for g in hosts],
        "find_induced P4 in C5 x2000": lambda: [find_induced(cat.Cn(5), cat.Pn(4)) for _ in range(2000)],
        f"one-vertex extensions of {len(seed_classes)} classes": lambda: [_extend_one(s) for s in seed_classes],
    }
    for n, d in seqs.items():
        out[f"recognize, n={n:,}"] = lambda d=d: recognize(d)
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = sorted(_core.BACKENDS, reverse=True)  # "python" first
    rows = []
    for name, fn in cases(args.quick).items():
        row = {"case": name}
        for b in backends:
            with _core.using(b):
                fn()  # warm caches
                row[b] = _best(fn, args.repeat)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps({"backends": backends, "results": rows}, indent=2))
        return 0
    width = max(len(r["case"]) for r in rows)
    print(f"{'case':<{width}}  " + "  ".join(f"{b:>11}" for b in backends) + "   speedup")
    for r in rows:
        cells = "  ".join(f"{r[b] * 1000:9.2f}ms" for b in backends)
        sp = f"{r['speedup']:8.1f}x" if "speedup" in r else ""
        print(f"{r['case']:<{width}}  {cells}  {sp}")
    if "cython" not in backends:
        print("(compiled extension not built; only the Python kernels were timed)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
