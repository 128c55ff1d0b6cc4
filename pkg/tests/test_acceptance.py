"""Acceptance suite: one PASS/FAIL line per criterion (1 to 9).

Run alone with ``pytest tests/test_acceptance.py -v -s``; the lines are also
repeated in the terminal summary.
"""

import random
import time

import numpy as np
import pytest

from unigraphs import catalog as cat
from unigraphs import (
    Graph,
    count_realizations,
    enumerate_graphs,
    is_isomorphic,
    realizations,
    recognize,
    verify,
)
from unigraphs.properties import tower_strictness
from unigraphs.synthetic import synthetic_hereditary_sequence

pytestmark = pytest.mark.acceptance


def _sweep(prop: str, max_n: int):
    res = verify(prop, max_n)
    return res, f"{prop} n<={max_n}: {res.checked} classes, {len(res.counterexamples)} counterexamples, {res.elapsed:.1f}s"


def test_criterion_1_realization_counts(criterion):
    t0 = time.perf_counter()
    us = realizations((4, 2, 2, 2, 2, 2))
    pans = realizations((3, 2, 2, 2, 1))
    elapsed = time.perf_counter() - t0
    ok_us = len(us) == 1 and is_isomorphic(us[0], cat.Us(1))
    want = [cat.fourPan(), cat.coFourPan()]
    ok_pans = len(pans) == 2 and all(any(is_isomorphic(h, w) for h in pans) for w in want)
    ok = ok_us and ok_pans and elapsed < 1.0
    criterion(1, ok, f"|R(4,2^5)|={len(us)} (Us(1): {ok_us}), |R(3,2,2,2,1)|={len(pans)} "
                     f"(4-pan, co-4-pan: {ok_pans}), {elapsed * 1000:.0f} ms")
    assert ok


def test_criterion_2_three_routes(criterion):
    t0 = time.perf_counter()
    routes, msg = _sweep("hered-uni-3routes", 7)
    oracle, msg2 = _sweep("hered-uni-oracle", 7)
    elapsed = time.perf_counter() - t0
    ok = routes.passed and oracle.passed and routes.per_n[7]["classes"] == 1044 and elapsed < 60
    criterion(2, ok, f"{msg}; {msg2}; total {elapsed:.1f}s")
    assert ok, routes.counterexamples[:5] + oracle.counterexamples[:5]


def test_criterion_3_forcibly_free(criterion):
    res, msg = _sweep("forcibly-free", 7)
    criterion(3, res.passed, msg)
    assert res.passed, res.counterexamples[:5]


def test_criterion_4_degree_criteria(criterion):
    res, msg = _sweep("degree-criteria", 7)
    tallies = [res.per_n[n]["tally"] for n in range(1, 8)]
    ok = res.passed and tallies == [2 ** (n - 1) for n in range(1, 8)]
    criterion(4, ok, f"{msg}; threshold classes n=1..7: {tallies}")
    assert ok, res.counterexamples[:5]


def test_criterion_5_decomposition(criterion):
    t0 = time.perf_counter()
    parts = [_sweep("decompose-roundtrip", 8), _sweep("decompose-sequence", 8), _sweep("complement-commutes", 7)]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r, _ in parts) and elapsed < 300
    criterion(5, ok, "; ".join(m for _, m in parts) + f"; total {elapsed:.1f}s")
    assert ok


def test_criterion_6_eg_equality(criterion):
    res, msg = _sweep("eg-lemma-split", 7)
    criterion(6, res.passed, msg)
    assert res.passed, res.counterexamples[:5]


def _best_time(d: np.ndarray, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        recognize(d)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_7_linear_time(criterion):
    sizes = [10 ** 4, 10 ** 5, 10 ** 6]
    seqs = [synthetic_hereditary_sequence(n, seed=7) for n in sizes]
    assert all(recognize(d) for d in seqs)
    ns = np.array([len(d) for d in seqs], dtype=float)
    ts = np.array([_best_time(d, 15 if len(d) < 10 ** 6 else 7) for d in seqs])
    # affine fit t = a + b n, weighted so each point counts by relative error
    w = 1.0 / ts
    a, b = np.linalg.lstsq(np.column_stack([w, ns * w]), np.ones_like(ts), rcond=None)[0]
    fit = a + b * ns
    ratios = ts / fit
    ok_fit = b > 0 and bool(np.all(fit > 0)) and bool(np.all((ratios <= 1.5) & (ratios >= 1 / 1.5)))
    ok = ok_fit and ts[-1] < 0.100
    timings = ", ".join(f"n={int(n)}: {t * 1000:.2f} ms" for n, t in zip(ns, ts))
    criterion(7, ok, f"{timings}; measured/fit ratios {np.round(ratios, 2).tolist()}")
    assert ok


def test_criterion_8_tower(criterion):
    res, msg = _sweep("tower", 7)
    strict = tower_strictness(7)
    ok = res.passed and all(v is not None for v in strict.values())
    witnesses = ", ".join(f"{k}={v}" for k, v in strict.items())
    criterion(8, ok, f"{msg}; strictness witnesses: {witnesses}")
    assert ok


def test_criterion_9_graph6_roundtrip(criterion):
    classes = list(enumerate_graphs(6))
    bad = [g for g in classes if Graph.from_graph6(g.to_graph6()) != g]
    rng = random.Random(20260917)
    bad_random = 0
    for _ in range(10 ** 4):
        n = rng.randint(0, 12)
        p = rng.random()
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        s = g.to_graph6()
        h = Graph.from_graph6(s)
        if h != g or h.to_graph6() != s:
            bad_random += 1
    ok = len(classes) == 156 and not bad and bad_random == 0
    criterion(9, ok, f"{len(classes)} classes at n=6 ({len(bad)} lossy), 10000 random n<=12 ({bad_random} lossy)")
    assert ok


def test_criterion_1_counts_match_enumeration():
    # independent cross-check of the two counts through the graph enumeration
    for d, want in (((4, 2, 2, 2, 2, 2), 1), ((3, 2, 2, 2, 1), 2)):
        hits = sum(1 for g in enumerate_graphs(len(d)) if g.degree_sequence().as_tuple() == d)
        assert hits == want == count_realizations(d)
