"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency rows.

Rows are Python ints, so the same representation covers n <= 64 (one
machine word, handed to the compiled kernels as is) and larger graphs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidVertex, NotAModule, UnigraphsError


class Graph:
    """Immutable simple graph. ``rows[v]`` is the neighbourhood bitmask of ``v``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int] | None = None, *, check: bool = True):
        if n < 0:
            raise UnigraphsError("vertex count must be nonnegative")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise UnigraphsError(f"expected {n} rows, got {len(rows)}")
        if check:
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r < 0 or r & ~full:
                    raise InvalidVertex(f"row {v} references a vertex outside 0..{n - 1}")
                if (r >> v) & 1:
                    raise UnigraphsError(f"self-loop at {v}")
                x = r
                while x:
                    low = x & -x
                    u = low.bit_length() - 1
                    if not (rows[u] >> v) & 1:
                        raise UnigraphsError(f"asymmetric adjacency {v}-{u}")
                    x ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise UnigraphsError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def _raw(cls, n: int, rows) -> "Graph":
        return cls(n, rows, check=False)

    # ---- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        from .graph6 import emit_graph6

        return f"Graph.from_graph6({emit_graph6(self)!r})"

    @classmethod
    def from_graph6(cls, text) -> "Graph":
        from .graph6 import parse_graph6

        return parse_graph6(text)

    def to_graph6(self) -> str:
        from .graph6 import emit_graph6

        return emit_graph6(self)

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def degree_sequence(self):
        from .sequence import DegreeSequence

        return DegreeSequence(sorted(self.degrees(), reverse=True))

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, r in enumerate(self.rows):
            for v in bits(r >> (u + 1)):
                yield u, u + 1 + v


def bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def empty_graph(n: int) -> Graph:
    return Graph._raw(n, (0,) * n)


# ---- construction algebra -----------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._raw(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G+H: vertices of ``g`` first, then those of ``h`` shifted by ``g.n``."""
    return Graph._raw(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    gm = (1 << g.n) - 1
    hm = ((1 << h.n) - 1) << g.n
    rows = tuple(r | hm for r in g.rows) + tuple((r << g.n) | gm for r in h.rows)
    return Graph._raw(g.n + h.n, rows)


def _vertex_list(g: Graph, w) -> list[int]:
    vs = sorted(w) if isinstance(w, (set, frozenset)) else list(w)
    for v in vs:
        g.check_vertex(v)
    if len(set(vs)) != len(vs):
        raise InvalidVertex("repeated vertex in vertex set")
    return vs


def induced(g: Graph, w) -> Graph:
    """G[W]. Sets are taken in ascending order; sequences in the order given,
    so vertex ``i`` of the result is ``w[i]``."""
    vs = _vertex_list(g, w)
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        r = 0
        for u in bits(g.rows[v]):
            i = pos.get(u)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph._raw(len(vs), rows)


def delete_vertices(g: Graph, w) -> Graph:
    drop = set(w)
    return induced(g, [v for v in range(g.n) if v not in drop])


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g`` (``order`` a permutation)."""
    if sorted(order) != list(range(g.n)):
        raise InvalidVertex("relabel needs a permutation of the vertex set")
    return induced(g, list(order))


def substitute(j: Graph, v: int, h: Graph) -> Graph:
    """Replace ``v`` by a copy of ``h`` joined to N_J(v).

    Result: the vertices of J-v in their original order, then those of ``h``.
    """
    j.check_vertex(v)
    rest = j.n - 1
    keep = [u for u in range(j.n) if u != v]
    base = induced(j, keep)
    nbr = 0
    for i, u in enumerate(keep):
        if j.adjacent(u, v):
            nbr |= 1 << i
    hmask = ((1 << h.n) - 1) << rest
    rows = [r | (hmask if (nbr >> i) & 1 else 0) for i, r in enumerate(base.rows)]
    rows += [(r << rest) | nbr for r in h.rows]
    return Graph._raw(rest + h.n, rows)


def is_module(g: Graph, m) -> bool:
    mm = mask(_vertex_list(g, m))
    for x in range(g.n):
        if (mm >> x) & 1:
            continue
        hit = g.rows[x] & mm
        if hit and hit != mm:
            return False
    return True


def contract_module(g: Graph, m) -> Graph:
    """Keep the smallest vertex of module ``m`` and delete the rest."""
    vs = _vertex_list(g, m)
    if not vs:
        raise NotAModule("empty vertex set")
    if not is_module(g, vs):
        raise NotAModule(f"{sorted(vs)} is not a module")
    keep = min(vs)
    return delete_vertices(g, [v for v in vs if v != keep])


def module_closure(g: Graph, mm: int) -> int:
    """Smallest module (as a bitmask) containing the vertex bitmask ``mm``."""
    changed = True
    while changed:
        changed = False
        for x in range(g.n):
            if (mm >> x) & 1:
                continue
            hit = g.rows[x] & mm
            if hit and hit != mm:
                mm |= 1 << x
                changed = True
    return mm


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def maximal_proper_modules(g: Graph) -> list[frozenset[int]]:
    """Maximal modules other than V(G), sorted by smallest member.

    Disconnected G (or co-G): the complements of the (co-)components.
    Otherwise the maximal proper modules partition V(G), and u, v share one
    exactly when the closure of {u, v} is proper.
    """
    n = g.n
    if n <= 1:
        return []
    full = (1 << n) - 1
    for h in (g, complement(g)):
        comps = components(h)
        if len(comps) > 1:
            return sorted((frozenset(bits(full & ~c)) for c in comps), key=min)
    block = [0] * n
    for u in range(n):
        block[u] |= 1 << u
        for v in range(u + 1, n):
            c = module_closure(g, (1 << u) | (1 << v))
            if c != full:
                block[u] |= c
                block[v] |= c
    out = {frozenset(bits(b)) for b in block}
    return sorted(out, key=min)
