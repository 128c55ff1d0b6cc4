from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unigraphs import catalog as cat
from unigraphs.decomposition import (
    SplittedGraph,
    complement_decomposition,
    compose,
    decompose,
    decompose_sequence,
    is_indecomposable,
)
from unigraphs.errors import NotGraphic, UnigraphsError
from unigraphs.graph import Graph, complement, disjoint_union, join, relabel
from unigraphs.iso import is_isomorphic

P4_SPLIT = SplittedGraph(cat.Pn(4), {0, 3}, {1, 2})


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_splitted_graph_validates_partition():
    with pytest.raises(UnigraphsError):
        SplittedGraph(cat.Pn(4), {0, 1}, {2, 3})  # A not independent
    with pytest.raises(UnigraphsError):
        SplittedGraph(cat.Pn(4), {0}, {1, 2})  # not a partition
    s = P4_SPLIT.complement()
    assert s.a == frozenset({1, 2}) and s.b == frozenset({0, 3})


def test_compose_examples():
    g = compose(P4_SPLIT, cat.Kn(3))
    assert g.degree_sequence().as_tuple() == (5, 5, 4, 4, 4, 1, 1)
    h = cat.chair()
    iso_vertex = SplittedGraph(Graph(1), {0}, set())
    dom_vertex = SplittedGraph(Graph(1), set(), {0})
    assert is_isomorphic(compose(iso_vertex, h), disjoint_union(h, Graph(1)))
    assert is_isomorphic(compose(dom_vertex, h), join(Graph(1), h))


def test_indecomposable_examples():
    for g in (cat.chair(), cat.R(), cat.Rbar(), cat.S(), cat.Sbar(), cat.Cn(5), cat.Pn(4)):
        assert is_indecomposable(g)
    assert not is_indecomposable(cat.Kn(3))
    assert not is_indecomposable(compose(P4_SPLIT, cat.Kn(3)))
    assert is_indecomposable(Graph(1))


def test_decompose_p4_over_k3():
    g = compose(P4_SPLIT, cat.Kn(3))
    cd = decompose(g)
    assert cd.tail is None
    first, *rest = cd.components
    assert is_isomorphic(first.splitted.g, cat.Pn(4))
    degs = g.degrees()
    assert sorted(degs[first.vertices[i]] for i in first.splitted.a) == [1, 1]
    assert sorted(degs[first.vertices[i]] for i in first.splitted.b) == [5, 5]
    assert len(rest) == 3 and all(c.splitted.is_trivial() for c in rest)
    assert is_isomorphic(cd.recompose(), g)
    assert cd.recompose_labeled() == g


def test_decompose_non_split_tails():
    for g in (cat.Cn(5), cat.Us(1)):
        cd = decompose(g)
        assert cd.components == () and cd.tail is not None
        assert is_isomorphic(cd.tail, g)


def test_decompose_sequence_examples():
    sd = decompose_sequence((5, 5, 4, 4, 4, 1, 1))
    first, *rest = sd.components
    assert (first.b_part, first.a_part) == ((2, 2), (1, 1))
    assert [c.sequence for c in rest] == [(0,), (0,), (0,)]
    assert sd.tail == ()
    sd = decompose_sequence((2, 2, 2, 2, 2))
    assert sd.components == () and sd.tail == (2, 2, 2, 2, 2)
    sd = decompose_sequence((3, 3, 3, 1, 1, 1))
    assert [c.sequence for c in sd.components] == [(3, 3, 3, 1, 1, 1)]
    assert sd.component_sequences() == [c.splitted.g.degree_sequence().as_tuple()
                                         for c in decompose(cat.net(3)).components]
    with pytest.raises(NotGraphic):
        decompose_sequence((3, 3, 1, 1))


def test_complement_decomposition_examples():
    c5 = decompose(cat.Cn(5))
    assert is_isomorphic(complement_decomposition(c5).tail, cat.Cn(5))
    net = complement_decomposition(decompose(cat.net(3)))
    assert is_isomorphic(net.components[0].splitted.g, cat.coNet(3))
    assert net.key() == decompose(cat.coNet(3)).key()
    g = join(cat.chair(), Graph(1))
    assert complement_decomposition(decompose(g)).key() == decompose(complement(g)).key()


@settings(max_examples=150)
@given(graphs())
def test_roundtrip_and_indecomposability(g: Graph):
    cd = decompose(g)
    assert cd.recompose_labeled() == g
    assert is_isomorphic(cd.recompose(), g)
    for f in cd.factors():
        assert is_indecomposable(f if isinstance(f, Graph) else f.g)


@settings(max_examples=150)
@given(graphs(), st.data())
def test_key_is_invariant_and_complete(g: Graph, data):
    perm = data.draw(st.permutations(range(g.n)))
    assert decompose(relabel(g, perm)).key() == decompose(g).key()
    assert complement_decomposition(decompose(g)).key() == decompose(complement(g)).key()


@settings(max_examples=150)
@given(graphs())
def test_sequence_route_matches_graph_route(g: Graph):
    cd = decompose(g)
    sd = decompose_sequence(g.degree_sequence())
    want = [c.splitted.g.degree_sequence().as_tuple() for c in cd.components]
    if cd.tail is not None:
        want.append(cd.tail.degree_sequence().as_tuple())
    assert sd.component_sequences() == want


def test_uniqueness_on_equal_sequences():
    # R and S share a degree sequence, so their component sequences agree,
    # yet the decompositions are told apart by the key
    assert decompose(cat.R()).key() != decompose(cat.S()).key()
