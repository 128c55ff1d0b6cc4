import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from unigraphs.errors import SequenceError
from unigraphs.oracle import count_realizations
from unigraphs.sequence import (
    DegreeSequence,
    conjugate,
    delta,
    eg_profile,
    is_graphic,
    m_of,
    normalize,
    parse_sequence,
    slack_direct,
)

sequences = st.lists(st.integers(0, 12), max_size=14)


def test_normalize_examples():
    assert normalize([2, 4, 2, 2, 2, 2]).as_tuple() == (4, 2, 2, 2, 2, 2)
    assert normalize([]).as_tuple() == ()
    assert normalize([1, 3, 1, 1, 2]).as_tuple() == (3, 2, 1, 1, 1)
    with pytest.raises(SequenceError):
        normalize([1, -1])


def test_normalize_large_values_take_the_comparison_sort():
    assert normalize([10 ** 9, 3, 10 ** 12]).as_tuple() == (10 ** 12, 10 ** 9, 3)


def test_construction_requires_order():
    with pytest.raises(SequenceError):
        DegreeSequence([1, 2])
    DegreeSequence([9, 0])  # terms above n-1 are allowed until graphicality is asked


def test_parse():
    assert parse_sequence("4,2^5").as_tuple() == (4, 2, 2, 2, 2, 2)
    assert parse_sequence(" 1 , 3,1 ").as_tuple() == (3, 1, 1)
    assert parse_sequence("").as_tuple() == ()
    with pytest.raises(SequenceError) as info:
        parse_sequence("3,x,1")
    assert info.value.column == 3


def test_is_graphic_examples():
    assert is_graphic((2, 2, 2, 2, 2))
    assert not is_graphic((3, 3, 1, 1))
    assert count_realizations((3, 3, 1, 1)) == 0
    assert is_graphic((3, 2, 1, 1, 1))
    assert is_graphic(())
    assert not is_graphic((1,))
    assert not is_graphic((5, 1))


def test_eg_profile_examples():
    p = eg_profile((3, 2, 2, 1))
    assert p.eg.tolist() == [0, 1, 2, 3] and p.m == 3
    p = eg_profile((2, 2, 2, 2, 2))
    assert p.eg.tolist() == [0] and p.m == 3
    p = eg_profile((5, 5, 4, 4, 4, 1, 1))
    assert p.eg.tolist() == [0, 2, 3, 4, 5] and p.m == 5


def test_conjugate_and_delta_examples():
    c = conjugate((4, 2, 2, 2, 2, 2))
    assert c[:5] == [6, 6, 6, 1, 1]
    assert delta((5, 5, 4, 4, 4, 1, 1), 1) == 2
    assert delta((5, 5, 4), 9) == 0
    with pytest.raises(SequenceError):
        delta((1, 1), -1)


@given(sequences)
def test_slack_matches_definition(raw):
    d = normalize(raw)
    assert eg_profile(d).slack.tolist() == slack_direct(d)


@given(sequences)
def test_graphic_iff_even_and_nonnegative_slack(raw):
    d = normalize(raw)
    want = sum(raw) % 2 == 0 and all(s >= 0 for s in slack_direct(d))
    assert is_graphic(d) == want


@given(sequences)
def test_profile_invariants(raw):
    d = normalize(raw)
    p = eg_profile(d)
    assert p.eg[0] == 0
    assert np.all(np.diff(p.eg) > 0)
    assert set(p.eg.tolist()) == {k for k, s in enumerate(p.slack.tolist()) if s == 0}
    if p.graphic:
        assert all(k <= p.m for k in p.eg.tolist())
    t = d.as_tuple()
    assert p.m == max([0] + [i for i in range(1, len(t) + 1) if t[i - 1] >= i - 1])
    assert m_of(d) == p.m


@given(sequences, st.integers(0, 14))
def test_conjugate_counts(raw, j):
    d = normalize(raw)
    c = conjugate(d)
    if j < len(c):
        assert c[j] == sum(1 for x in raw if x >= j)
    assert delta(d, j) == sum(1 for i, x in enumerate(d.as_tuple(), start=1) if i > j and x == j)


@given(st.lists(st.integers(0, 7), min_size=1, max_size=8))
def test_graphic_matches_realization_search(raw):
    d = normalize(raw)
    assert is_graphic(d) == (count_realizations(d) > 0)
