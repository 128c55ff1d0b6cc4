"""Brute-force ground truth: enumeration, realizations, verification sweeps.

Hard caps: graphs are enumerated up to ``MAX_N`` = 8 vertices; the
hereditary brute force (which looks at every induced subgraph) is capped at
``HEREDITARY_MAX_N`` = 7. Exceeding a cap raises :class:`CapExceeded`.
"""

from __future__ import annotations

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .errors import CapExceeded, UnigraphsError
from .graph import Graph, bits, induced
from .iso import canonical_form, canonical_relabel, find_induced
from .sequence import as_sequence, is_graphic

MAX_N = 8
HEREDITARY_MAX_N = 7


def _cap(n: int, cap: int = MAX_N, what: str = "n") -> None:
    if n > cap:
        raise CapExceeded(f"{what}={n} exceeds the oracle cap {cap}")


# ---- enumeration -----------------------------------------------------------

def _extend_one(g6: str) -> list[bytes]:
    """Canonical forms of every one-vertex extension of a graph."""
    g = Graph.from_graph6(g6)
    n = g.n
    out = set()
    for nb in range(1 << n):
        rows = list(g.rows) + [nb]
        for u in bits(nb):
            rows[u] |= 1 << n
        out.add(canonical_form(Graph._raw(n + 1, rows)))
    return list(out)


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    prev = _classes(n - 1)
    forms = set()
    for g6 in prev:
        forms.update(_extend_one(g6))
    return tuple(sorted(f.decode() for f in forms))


def _classes_parallel(n: int, jobs: int) -> tuple[str, ...]:
    prev = _classes(n - 1)
    forms = set()
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(_extend_one, prev, chunksize=max(1, len(prev) // (4 * jobs))):
            forms.update(part)
    return tuple(sorted(f.decode() for f in forms))


def enumerate_graphs(n: int, jobs: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Built by adding a vertex with every neighbourhood to each class on n-1
    vertices and deduplicating canonical forms. Output is sorted by the
    canonical graph6 string, so the order does not depend on ``jobs``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _cap(n)
    classes = _classes_parallel(n, jobs) if jobs > 1 and n >= 2 else _classes(n)
    for g6 in classes:
        yield Graph.from_graph6(g6)


def count_graphs(n: int) -> int:
    _cap(n)
    return len(_classes(n))


def enumerate_graphs_alt(n: int) -> list[Graph]:
    """Independent regeneration: all labelled graphs filtered by canonical form
    (no augmentation). Only for small n."""
    _cap(n, 7)
    pairs = list(combinations(range(n), 2))
    seen = set()
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        seen.add(canonical_form(Graph._raw(n, rows)))
    return [Graph.from_graph6(f.decode()) for f in sorted(seen)]


# ---- realizations ----------------------------------------------------------

def _realize(d: tuple[int, ...], limit: int | None) -> list[Graph]:
    n = len(d)
    found: dict[bytes, Graph] = {}
    rows = [0] * n
    res = list(d)

    def rec(v: int) -> bool:
        while v < n and res[v] == 0:
            v += 1
        if v == n:
            g = Graph._raw(n, list(rows))
            f = canonical_form(g)
            if f not in found:
                found[f] = canonical_relabel(g)
                if limit is not None and len(found) >= limit:
                    return True
            return False
        cand = [u for u in range(v + 1, n) if res[u] > 0]
        need = res[v]
        if need > len(cand):
            return False
        tried = set()
        for pick in combinations(cand, need):
            # vertices with equal residual and equal current neighbourhood are interchangeable
            sig = tuple(sorted((res[u], rows[u]) for u in pick))
            if sig in tried:
                continue
            tried.add(sig)
            for u in pick:
                res[u] -= 1
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            res[v] = 0
            rest = sorted((res[u] for u in range(v + 1, n)), reverse=True)
            if is_graphic(rest) and rec(v + 1):
                return True
            res[v] = need
            for u in pick:
                res[u] += 1
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
        return False

    rec(0)
    return [found[k] for k in sorted(found)]


@functools.lru_cache(maxsize=None)
def _realizations_cached(d: tuple[int, ...]) -> tuple[Graph, ...]:
    return tuple(_realize(d, None))


def realizations(d, limit: int | None = None) -> list[Graph]:
    """All pairwise non-isomorphic realizations of ``d`` (sorted by canonical
    form), at most ``limit`` of them. Empty exactly when d is not graphic."""
    seq = as_sequence(d)
    _cap(seq.n)
    if limit is not None and limit < 0:
        raise ValueError("limit must be >= 0")
    if not is_graphic(seq):
        return []
    out = list(_realizations_cached(seq.as_tuple()))
    return out if limit is None else out[:limit]


def count_realizations(d) -> int:
    return len(realizations(d))


@functools.lru_cache(maxsize=None)
def _index(n: int) -> dict[tuple, tuple[str, ...]]:
    idx: dict[tuple, list] = {}
    for g in enumerate_graphs(n):
        idx.setdefault(g.degree_sequence().as_tuple(), []).append(g.to_graph6())
    return {k: tuple(v) for k, v in idx.items()}


def realizations_by_enumeration(d) -> list[Graph]:
    """Realizations looked up in the enumeration (independent cross-check)."""
    seq = as_sequence(d)
    _cap(seq.n)
    return [Graph.from_graph6(s) for s in _index(seq.n).get(seq.as_tuple(), ())]


# ---- brute-force class tests -----------------------------------------------

def is_unigraph_bruteforce(g: Graph) -> bool:
    _cap(g.n)
    return count_realizations(g.degree_sequence()) == 1


@functools.lru_cache(maxsize=None)
def _hereditary_by_form(form: bytes) -> bool:
    g = Graph.from_graph6(form.decode())
    if not is_unigraph_bruteforce(g):
        return False
    # one-vertex deletions suffice: the property recurses through the memo
    return all(_hereditary_by_form(canonical_form(induced(g, [u for u in range(g.n) if u != v])))
               for v in range(g.n))


def is_hereditary_unigraph_bruteforce(g: Graph) -> bool:
    """Every induced subgraph is the unique realization of its sequence."""
    _cap(g.n, HEREDITARY_MAX_N, "n (hereditary check)")
    return _hereditary_by_form(canonical_form(g))


def is_forcibly_free(d, patterns) -> bool:
    """Every realization of ``d`` avoids every pattern as an induced subgraph."""
    pats = list(patterns.values()) if isinstance(patterns, dict) else list(patterns)
    return all(find_induced(h, p) is None for h in realizations(d) for p in pats)


# ---- verification sweeps ---------------------------------------------------

@dataclass(frozen=True)
class Property:
    id: str
    description: str
    check: Callable[[Graph], str | None]  # None = holds, else a message
    cap: int = MAX_N
    tally: Callable[[Graph], bool] | None = None
    expected_tally: Callable[[int], int | None] | None = None
    min_n: int = 0


@dataclass
class VerificationResult:
    property: str
    min_n: int
    max_n: int
    checked: int
    counterexamples: list = field(default_factory=list)  # [graph6, message]
    elapsed: float = 0.0
    per_n: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, meta: bool = True) -> dict:
        out = {
            "property": self.property,
            "n_range": [self.min_n, self.max_n],
            "classes_checked": self.checked,
            "counterexamples": [list(c) for c in self.counterexamples],
            "passed": self.passed,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
        }
        if meta:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


PROPERTIES: dict[str, Property] = {}


def register(prop: Property) -> Property:
    PROPERTIES[prop.id] = prop
    return prop


def _run_chunk(args) -> tuple[list, int]:
    from . import properties  # noqa: F401  (registers the built-in properties)

    pid, g6s = args
    prop = PROPERTIES[pid]
    bad = []
    hits = 0
    for s in g6s:
        g = Graph.from_graph6(s)
        try:
            msg = prop.check(g)
        except UnigraphsError as e:
            msg = f"{type(e).__name__}: {e}"
        if msg is not None:
            bad.append((s, msg))
        if prop.tally is not None and prop.tally(g):
            hits += 1
    return bad, hits


def verify(property_id: str, max_n: int, jobs: int = 1, min_n: int | None = None) -> VerificationResult:
    """Sweep every isomorphism class with min_n <= n <= max_n."""
    from . import properties  # noqa: F401

    if property_id not in PROPERTIES:
        raise KeyError(f"unknown property {property_id!r}; known: {sorted(PROPERTIES)}")
    prop = PROPERTIES[property_id]
    _cap(max_n, prop.cap)
    lo = prop.min_n if min_n is None else min_n
    t0 = time.perf_counter()
    result = VerificationResult(property_id, lo, max_n, 0)
    ex = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(lo, max_n + 1):
            g6s = [g.to_graph6() for g in enumerate_graphs(n)]
            size = max(1, len(g6s) // (4 * jobs)) if ex else len(g6s) or 1
            chunks = [(property_id, g6s[i:i + size]) for i in range(0, len(g6s), size)]
            outs = list(ex.map(_run_chunk, chunks)) if ex else [_run_chunk(c) for c in chunks]
            bad = sorted(b for o in outs for b in o[0])
            hits = sum(o[1] for o in outs)
            result.checked += len(g6s)
            result.counterexamples.extend(bad)
            entry = {"classes": len(g6s), "counterexamples": len(bad)}
            if prop.tally is not None:
                entry["tally"] = hits
                want = prop.expected_tally(n) if prop.expected_tally else None
                if want is not None:
                    entry["expected_tally"] = want
                    if hits != want:
                        result.counterexamples.append((f"n={n}", f"tally {hits} != expected {want}"))
            result.per_n[n] = entry
    finally:
        if ex is not None:
            ex.shutdown()
    result.elapsed = time.perf_counter() - t0
    return result


__all__ = [
    "MAX_N", "HEREDITARY_MAX_N", "enumerate_graphs", "enumerate_graphs_alt", "count_graphs",
    "realizations", "count_realizations", "realizations_by_enumeration",
    "is_unigraph_bruteforce", "is_hereditary_unigraph_bruteforce", "is_forcibly_free",
    "Property", "VerificationResult", "PROPERTIES", "register", "verify",
]
