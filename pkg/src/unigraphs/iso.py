"""Canonical forms, isomorphism and induced-subgraph search."""

from __future__ import annotations

from typing import Mapping, Sequence

from . import _core
from .graph import Graph, bits
from .graph6 import emit_graph6


def canonical_order(g: Graph, colors: Sequence | None = None) -> list[int]:
    return _core.canon_order(g.n, g.rows, None if colors is None else list(colors))


def _apply_order(g: Graph, order: Sequence[int]) -> Graph:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._raw(g.n, rows)


def canonical_relabel(g: Graph, colors: Sequence | None = None) -> Graph:
    return _apply_order(g, canonical_order(g, colors))


def canonical_form(g: Graph, colors: Sequence | None = None) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    With ``colors`` (one sortable label per vertex) isomorphisms must preserve
    colours, and the colour sequence in canonical order is appended.
    """
    order = canonical_order(g, colors)
    form = emit_graph6(_apply_order(g, order)).encode()
    if colors is not None:
        form += b"|" + repr([colors[v] for v in order]).encode()
    return form


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Injective map (tuple indexed by pattern vertex) onto an induced copy of
    ``pattern`` in ``host``, or None. Search order is deterministic: pattern
    vertices in index order, host candidates ascending."""
    return _core.find_induced(host.n, host.rows, pattern.n, pattern.rows)


def first_induced(host: Graph, patterns: Mapping[str, Graph]) -> tuple[str, tuple[int, ...]] | None:
    """First (name, embedding) among ``patterns`` induced in ``host``."""
    for name, p in patterns.items():
        emb = find_induced(host, p)
        if emb is not None:
            return name, emb
    return None


def is_free(host: Graph, patterns: Mapping[str, Graph]) -> bool:
    return first_induced(host, patterns) is None
