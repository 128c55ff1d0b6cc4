"""Composition of splitted graphs and the canonical decomposition.

A decomposition is stored outermost component first: the clique of every
component is joined to all vertices of the components after it (and of the
tail), and its independent set to none of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import UnigraphsError
from .graph import Graph, bits, complement, empty_graph, induced, mask
from .iso import canonical_form
from .sequence import DegreeSequence, as_sequence, eg_profile, require_graphic


@dataclass(frozen=True)
class SplittedGraph:
    """Split graph ``g`` with independent set ``a`` and clique ``b``."""

    g: Graph
    a: frozenset
    b: frozenset

    def __post_init__(self):
        a, b = frozenset(self.a), frozenset(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a & b or (a | b) != frozenset(range(self.g.n)):
            raise UnigraphsError("A and B must partition the vertex set")
        am, bm = mask(a), mask(b)
        for v in a:
            if self.g.rows[v] & am:
                raise UnigraphsError(f"A is not independent (vertex {v})")
        for v in b:
            if (self.g.rows[v] | (1 << v)) & bm != bm:
                raise UnigraphsError(f"B is not a clique (vertex {v})")

    @property
    def n(self) -> int:
        return self.g.n

    def is_trivial(self) -> bool:
        return self.g.n == 1

    def complement(self) -> "SplittedGraph":
        return SplittedGraph(complement(self.g), self.b, self.a)

    def key(self) -> bytes:
        """Canonical form of the splitted graph (isomorphisms must map A to A)."""
        return canonical_form(self.g, [1 if v in self.a else 0 for v in range(self.g.n)])


def compose(s: SplittedGraph, h: Graph) -> Graph:
    """(G, A, B) o H: vertices of ``s.g`` first, then ``h`` shifted; B complete to H."""
    n0 = s.g.n
    hm = ((1 << h.n) - 1) << n0
    bm = mask(s.b)
    rows = [r | (hm if v in s.b else 0) for v, r in enumerate(s.g.rows)]
    rows += [(r << n0) | bm for r in h.rows]
    return Graph._raw(n0 + h.n, rows)


def _four_vertex_obstruction(g: Graph, quad: int) -> bool:
    degs = sorted((g.rows[v] & quad).bit_count() for v in bits(quad))
    return degs in ([1, 1, 1, 1], [2, 2, 2, 2], [1, 1, 2, 2])


def is_indecomposable(g: Graph) -> bool:
    """Canonically indecomposable: every two vertices are linked by a chain of
    overlapping induced 2K2 / C4 / P4 subgraphs (one-vertex graphs qualify)."""
    n = g.n
    if n <= 1:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for quad in combinations(range(n), 4):
        qm = mask(quad)
        if _four_vertex_obstruction(g, qm):
            r = find(quad[0])
            for v in quad[1:]:
                parent[find(v)] = r
    root = find(0)
    return all(find(v) == root for v in range(n))


@dataclass(frozen=True)
class Component:
    splitted: SplittedGraph
    vertices: tuple  # host vertex of each local vertex


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Splitted components outermost first, then an optional non-split tail.

    When the whole graph is split the innermost splitted component stands in
    for the last factor; its partition puts the top-m(d) degrees in the clique.
    """

    n: int
    components: tuple
    tail: Graph | None = None
    tail_vertices: tuple = ()
    meta: dict = field(default_factory=dict, compare=False)

    def factors(self) -> list:
        return [c.splitted for c in self.components] + ([self.tail] if self.tail is not None else [])

    def recompose(self) -> Graph:
        """Fold the composition from the inside out (fresh vertex labels)."""
        h = self.tail if self.tail is not None else empty_graph(0)
        for c in reversed(self.components):
            h = compose(c.splitted, h)
        return h

    def recompose_labeled(self) -> Graph:
        """Rebuild the graph on the original vertex labels."""
        rows = [0] * self.n
        inner = mask(self.tail_vertices)
        if self.tail is not None:
            for i, v in enumerate(self.tail_vertices):
                rows[v] |= mask(self.tail_vertices[u] for u in bits(self.tail.rows[i]))
        for c in reversed(self.components):
            vs = c.vertices
            g = c.splitted.g
            for i, v in enumerate(vs):
                rows[v] |= mask(vs[u] for u in bits(g.rows[i]))
                if i in c.splitted.b:
                    rows[v] |= inner
                    for u in bits(inner):
                        rows[u] |= 1 << v
            inner |= mask(vs)
        return Graph(self.n, rows)

    def key(self) -> tuple:
        """Isomorphism invariant of the decomposition.

        The innermost factor is compared as a plain graph, since a one-vertex
        innermost factor may be read with either side.
        """
        parts = [c.splitted.key() for c in self.components]
        if self.tail is not None:
            parts.append(b"tail:" + canonical_form(self.tail))
        elif parts:
            parts[-1] = b"last:" + canonical_form(self.components[-1].splitted.g)
        return tuple(parts)

    def to_dict(self) -> dict:
        comps = []
        for c in self.components:
            s = c.splitted
            comps.append({
                "graph6": s.g.to_graph6(),
                "vertices": list(c.vertices),
                "A": sorted(c.vertices[i] for i in s.a),
                "B": sorted(c.vertices[i] for i in s.b),
                "degree_sequence": s.g.degree_sequence().as_tuple(),
            })
        return {
            "components": comps,
            "tail": None if self.tail is None else {
                "graph6": self.tail.to_graph6(),
                "vertices": list(self.tail_vertices),
                "degree_sequence": self.tail.degree_sequence().as_tuple(),
            },
            "meta": dict(self.meta),
        }


def _component(g: Graph, b: list, a: list) -> Component:
    vs = tuple(b) + tuple(a)
    return Component(SplittedGraph(induced(g, vs), range(len(b), len(vs)), range(len(b))), vs)


def decompose(g: Graph) -> CanonicalDecomposition:
    """Canonical decomposition read off the degree order and the EG profile.

    With v_1..v_n in nonincreasing degree order (ties by label) and
    consecutive zero-slack indices k < k', the clique {v_{k+1}..v_{k'}} pairs
    with the independent set of vertices past the last zero-slack index t
    whose degree lies strictly between k and k'. Vertices past t with degree
    exactly an EG index are one-vertex components; those with degree above t
    make up the non-split tail.
    """
    n = g.n
    degs = g.degrees()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    d = [degs[v] for v in order]
    prof = eg_profile(DegreeSequence(d))
    eg = prof.eg.tolist()
    t = eg[-1]
    at_level: dict[int, list] = {}
    for i in range(t, n):
        at_level.setdefault(d[i], []).append(order[i])
    comps = []
    for k, kk in zip(eg, eg[1:]):
        comps += [_component(g, [], [v]) for v in at_level.get(k, [])]
        a = [order[i] for i in range(t, n) if k < d[i] < kk]
        comps.append(_component(g, order[k:kk], a))
    comps += [_component(g, [], [v]) for v in at_level.get(t, [])]
    tail_vs = tuple(order[i] for i in range(t, n) if d[i] > t)
    tail = induced(g, tail_vs) if tail_vs else None
    return CanonicalDecomposition(
        n=n,
        components=tuple(comps),
        tail=tail,
        tail_vertices=tail_vs,
        meta={"eg": eg, "t": t, "innermost_partition": "top-m(d) clique" if tail is None else None},
    )


def complement_decomposition(cd: CanonicalDecomposition) -> CanonicalDecomposition:
    """Component-wise complement with the roles of A and B exchanged."""
    comps = tuple(Component(c.splitted.complement(), c.vertices) for c in cd.components)
    tail = complement(cd.tail) if cd.tail is not None else None
    return CanonicalDecomposition(cd.n, comps, tail, cd.tail_vertices, dict(cd.meta))


# ---- sequence level -------------------------------------------------------

@dataclass(frozen=True)
class SequenceComponent:
    """Degree data of one canonical component.

    ``slot`` is (k, k') for clique slots and (k, k) for a one-vertex
    component on the independent side whose degree equals the EG index k.
    """

    slot: tuple
    b_part: tuple
    a_part: tuple

    @property
    def sequence(self) -> tuple:
        return tuple(sorted(self.b_part + self.a_part, reverse=True))

    @property
    def trivial(self) -> bool:
        return len(self.b_part) + len(self.a_part) == 1

    def to_dict(self) -> dict:
        return {
            "slot": list(self.slot),
            "split": True,
            "trivial": self.trivial,
            "B": list(self.b_part),
            "A": list(self.a_part),
            "sequence": list(self.sequence),
        }


@dataclass(frozen=True)
class SequenceDecomposition:
    components: tuple
    tail: tuple  # degrees inside the non-split tail, nonincreasing
    t: int
    eg: tuple

    def component_sequences(self) -> list[tuple]:
        out = [c.sequence for c in self.components]
        if self.tail:
            out.append(self.tail)
        return out

    def to_dict(self) -> dict:
        return {
            "eg": list(self.eg),
            "t": self.t,
            "components": [c.to_dict() for c in self.components],
            "tail": None if not self.tail else {"split": False, "sequence": list(self.tail)},
        }


def decompose_sequence(d) -> SequenceDecomposition:
    """Degree sequences of the canonical components of any realization of ``d``.

    Clique vertices of slot (k, k') lose k plus the number of vertices after
    position k' with degree >= k'; independent vertices lose k; tail vertices
    lose t.
    """
    d = as_sequence(d)
    prof = require_graphic(d)
    terms = d.terms
    conj = prof.conj_full
    eg = prof.eg.tolist()
    t = eg[-1]

    def level(e):
        lo, hi = max(t, int(conj[e + 1])), int(conj[e])
        return max(0, hi - lo)

    comps = []
    for k, kk in zip(eg, eg[1:]):
        comps += [SequenceComponent((k, k), (), (0,))] * level(k)
        inner = max(0, int(conj[kk]) - kk)
        b = tuple((terms[k:kk] - k - inner).tolist())
        lo, hi = max(t, int(conj[kk])), int(conj[k + 1])
        a = tuple((terms[lo:hi] - k).tolist()) if hi > lo else ()
        comps.append(SequenceComponent((k, kk), b, a))
    comps += [SequenceComponent((t, t), (), (0,))] * level(t)
    hi = int(conj[t + 1]) if t + 1 < len(conj) else 0
    tail = tuple((terms[t:hi] - t).tolist()) if hi > t else ()
    return SequenceDecomposition(tuple(comps), tail, t, tuple(eg))
