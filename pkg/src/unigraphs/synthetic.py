"""Large degree sequences built by composing component sequences.

Components are described by their own (clique degrees, independent degrees)
and combined with the composition degree rule: a clique vertex gains every
vertex further in plus every clique vertex further out; an independent
vertex gains the clique vertices further out. Nothing is realized as a graph,
so sequences with millions of terms are cheap to build.
"""

from __future__ import annotations

import numpy as np

from .sequence import normalize


def _thin(k: int) -> tuple[np.ndarray, np.ndarray]:  # net
    return np.full(k, k, np.int64), np.ones(k, np.int64)


def _thick(k: int) -> tuple[np.ndarray, np.ndarray]:  # co-net
    return np.full(k, 2 * k - 2, np.int64), np.full(k, k - 1, np.int64)


def _top_expanded(blocks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Thin headless spider with body vertex i blown up to a clique of blocks[i]."""
    b = int(blocks.sum())
    return np.full(b, b, np.int64), blocks.astype(np.int64)


def _bottom_expanded(blocks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Thin headless spider with foot i blown up to an independent set of blocks[i]."""
    k = len(blocks)
    return (k - 1 + blocks).astype(np.int64), np.ones(int(blocks.sum()), np.int64)


def _tail(kind: str, r: int, s: int) -> np.ndarray:
    if kind == "C5":
        return np.full(5, 2, np.int64)
    if kind == "rK2":
        return np.ones(2 * r, np.int64)
    if kind == "co-rK2":
        return np.full(2 * r, 2 * r - 2, np.int64)
    if kind == "K1r+sK2":
        return np.concatenate([[r], np.ones(2 * s + r, np.int64)])
    if kind == "co-(K1r+sK2)":
        return np.concatenate([np.full(2 * s + r, 2 * s + r - 1, np.int64), [2 * s]])
    raise ValueError(kind)


def compose_sequences(parts: list[tuple[np.ndarray, np.ndarray]], tail: np.ndarray | None = None) -> np.ndarray:
    """Degree sequence of (G_k, A_k, B_k) o ... o (G_1, A_1, B_1) o G_0.

    ``parts`` is outermost first, each entry (B degrees, A degrees) inside its
    own component. Result is nonincreasing.
    """
    tail = np.zeros(0, np.int64) if tail is None else np.asarray(tail, np.int64)
    sizes = np.array([len(b) + len(a) for b, a in parts] + [len(tail)], np.int64)
    bsizes = np.array([len(b) for b, _ in parts], np.int64)
    inner = np.concatenate([np.cumsum(sizes[::-1])[::-1][1:], [0]])[: len(parts)]  # vertices further in
    outer_b = np.concatenate([[0], np.cumsum(bsizes)])  # clique vertices further out
    out = []
    for j, (b, a) in enumerate(parts):
        out.append(b + inner[j] + outer_b[j])
        out.append(a + outer_b[j])
    out.append(tail + outer_b[len(parts)])
    return normalize(np.concatenate(out) if out else tail).terms


def synthetic_hereditary_sequence(n: int, seed: int = 0, tail: str | None = "auto") -> np.ndarray:
    """A hereditary-unigraph degree sequence with about ``n`` terms.

    Components are drawn at random among single vertices, nets, co-nets and
    top/bottom-expanded spiders; the tail among the admissible non-split
    shapes. The exact length can exceed ``n`` by one component.
    """
    rng = np.random.default_rng(seed)
    parts: list[tuple[np.ndarray, np.ndarray]] = []
    total = 0
    kinds = ("A1", "B1", "thin", "thick", "top", "bottom")
    empty = np.zeros(0, np.int64)
    one = np.zeros(1, np.int64)
    if tail == "auto":
        tail = str(rng.choice(["C5", "rK2", "co-rK2", "K1r+sK2", "co-(K1r+sK2)", "none"]))
    t = None if tail in (None, "none") else _tail(tail, int(rng.integers(2, 6)), int(rng.integers(1, 4)))
    total += 0 if t is None else len(t)
    scale = max(2, int(np.sqrt(n)) // 4)
    while total < n:
        kind = kinds[int(rng.integers(0, len(kinds)))]
        if kind == "A1":
            part = (empty, one)
        elif kind == "B1":
            part = (one, empty)
        else:
            k = int(rng.integers(2, scale + 2))
            if kind == "thin":
                part = _thin(k)
            elif kind == "thick":
                part = _thick(k)
            else:
                blocks = rng.integers(1, 4, size=k)
                part = _top_expanded(blocks) if kind == "top" else _bottom_expanded(blocks)
        parts.append(part)
        total += len(part[0]) + len(part[1])
    return compose_sequences(parts, t)


__all__ = ["compose_sequences", "synthetic_hereditary_sequence"]
