from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unigraphs import catalog as cat
from unigraphs.errors import InvalidVertex, NotAModule, UnigraphsError
from unigraphs.graph import (
    Graph,
    complement,
    contract_module,
    disjoint_union,
    induced,
    is_module,
    join,
    maximal_proper_modules,
    relabel,
    substitute,
)
from unigraphs.iso import is_isomorphic
from unigraphs.spiders import recognize_bottom_expanded, recognize_spider, recognize_top_expanded


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_constructor_rejects_loops_and_asymmetry():
    with pytest.raises(UnigraphsError):
        Graph(2, [0b01, 0])
    with pytest.raises(UnigraphsError):
        Graph(2, [0b10, 0])
    with pytest.raises(InvalidVertex):
        Graph.from_edges(3, [(0, 3)])


@given(graphs())
def test_invariants(g: Graph):
    for u in g.vertices():
        assert not g.adjacent(u, u)
        for v in g.vertices():
            assert g.adjacent(u, v) == g.adjacent(v, u)
        assert 0 <= g.degree(u) <= max(g.n - 1, 0)
    assert sum(g.degrees()) == 2 * g.num_edges()


@given(graphs())
def test_complement_is_involution(g: Graph):
    h = complement(g)
    assert complement(h) == g
    assert g.num_edges() + h.num_edges() == g.n * (g.n - 1) // 2


def test_complement_examples():
    assert is_isomorphic(complement(cat.Cn(5)), cat.Cn(5))
    assert is_isomorphic(complement(cat.chair()), cat.kite())
    assert is_isomorphic(complement(cat.fourPan()), cat.coFourPan())


def test_union_and_join():
    k2 = cat.Kn(2)
    assert is_isomorphic(disjoint_union(k2, k2), cat.rK2(2))
    assert join(cat.Kn(1), cat.Cn(4)).degree_sequence().as_tuple() == (4, 3, 3, 3, 3)
    g = cat.chair()
    assert is_isomorphic(join(Graph(0), g), g)


@given(graphs(6), graphs(6))
def test_join_is_complement_of_union(g: Graph, h: Graph):
    assert join(g, h) == complement(disjoint_union(complement(g), complement(h)))


def test_induced():
    g = cat.R()
    assert induced(g, range(g.n)) == g
    with pytest.raises(InvalidVertex):
        induced(g, [0, 99])
    # deleting pendant vertex 0 leaves the kite; the other pendant does not
    assert g.degree(0) == 1
    assert is_isomorphic(induced(g, [1, 2, 3, 4, 5]), cat.kite())
    assert not is_isomorphic(induced(g, [0, 1, 2, 4, 5]), cat.kite())


def test_induced_subgraphs_of_us1_realize_pan_sequence():
    u = cat.Us(1)
    hits = [c for c in combinations(range(u.n), 5)
            if induced(u, c).degree_sequence().as_tuple() == (3, 2, 2, 2, 1)]
    assert hits
    kinds = {is_isomorphic(induced(u, c), cat.fourPan()) for c in hits}
    assert kinds == {True, False}  # both the 4-pan and the co-4-pan occur


def test_induced_preserves_order():
    g = cat.Pn(4)  # 0-1-2-3
    h = induced(g, [3, 2, 0])
    assert h.adjacent(0, 1) and not h.adjacent(1, 2)


@given(graphs(7), st.data())
def test_relabel_keeps_isomorphism_class(g: Graph, data):
    perm = data.draw(st.permutations(range(g.n)))
    assert is_isomorphic(relabel(g, perm), g)


def test_substitute():
    j = cat.chair()
    for v in j.vertices():
        assert substitute(j, v, Graph(1)) == induced(j, [u for u in j.vertices() if u != v] + [v])
        assert is_isomorphic(substitute(j, v, Graph(1)), j)
    with pytest.raises(InvalidVertex):
        substitute(j, 9, Graph(1))


def test_substitute_into_net2():
    net = cat.net(2)  # P4
    body = [v for v in net.vertices() if net.degree(v) == 2]
    feet = [v for v in net.vertices() if net.degree(v) == 1]
    top = substitute(net, body[0], cat.Kn(2))
    bottom = substitute(net, feet[0], cat.empty(2))
    assert top.n == bottom.n == 5
    assert recognize_top_expanded(top) is not None
    assert recognize_bottom_expanded(bottom) is not None
    assert recognize_spider(top) is None and recognize_spider(bottom) is None


@given(graphs(5), graphs(4), st.data())
def test_substitute_degrees(j: Graph, h: Graph, data):
    if j.n == 0:
        return
    v = data.draw(st.integers(0, j.n - 1))
    g = substitute(j, v, h)
    assert g.n == j.n - 1 + h.n
    rest = j.n - 1
    for i in range(h.n):
        assert g.degree(rest + i) == h.degree(i) + j.degree(v)


def test_contract_module():
    g = cat.chair()
    assert contract_module(g, [2]) == g
    assert contract_module(g, g.vertices()).n == 1
    net = cat.net(2)
    feet = [v for v in net.vertices() if net.degree(v) == 1]
    bottom = substitute(net, feet[0], cat.empty(2))
    twins = [bottom.n - 2, bottom.n - 1]
    assert is_module(bottom, twins)
    assert is_isomorphic(contract_module(bottom, twins), net)
    with pytest.raises(NotAModule):
        contract_module(cat.Pn(4), [0, 1])
    with pytest.raises(NotAModule):
        contract_module(g, [])


def test_maximal_proper_modules_examples():
    assert sorted(map(sorted, maximal_proper_modules(cat.Pn(4)))) == [[0], [1], [2], [3]]
    c4 = maximal_proper_modules(cat.Cn(4))
    assert sorted(map(sorted, c4)) == [[0, 2], [1, 3]]
    assert maximal_proper_modules(Graph(1)) == []


def _brute_maximal_modules(g: Graph) -> set:
    full = frozenset(g.vertices())
    mods = [frozenset(c) for r in range(1, g.n) for c in combinations(range(g.n), r) if is_module(g, c)]
    return {m for m in mods if not any(m < o for o in mods)} - {full}


@settings(max_examples=60)
@given(graphs(7))
def test_maximal_proper_modules_match_brute_force(g: Graph):
    if g.n < 2:
        return
    assert set(maximal_proper_modules(g)) == _brute_maximal_modules(g)
