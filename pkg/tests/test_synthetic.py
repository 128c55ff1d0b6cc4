import numpy as np
import pytest

from unigraphs.classes import hereditary_component, recognize
from unigraphs.oracle import is_hereditary_unigraph_bruteforce, realizations
from unigraphs.sequence import is_graphic
from unigraphs.synthetic import (
    _bottom_expanded,
    _tail,
    _thick,
    _thin,
    _top_expanded,
    compose_sequences,
    synthetic_hereditary_sequence,
)

SMALL = [
    ([_thin(2)], None),
    ([_thick(3)], None),
    ([(np.zeros(1, np.int64), np.zeros(0, np.int64))], _tail("C5", 0, 0)),
    ([_top_expanded(np.array([1, 2]))], None),
    ([_bottom_expanded(np.array([2, 1]))], _tail("rK2", 1, 0)),
    ([(np.zeros(0, np.int64), np.zeros(1, np.int64)), _thin(2)], None),
    ([], _tail("K1r+sK2", 2, 1)),
    ([], _tail("co-(K1r+sK2)", 1, 1)),
]


@pytest.mark.parametrize("parts, tail", SMALL)
def test_small_compositions_are_hereditary_unigraphs(parts, tail):
    d = compose_sequences(parts, tail)
    assert len(d) <= 7
    reals = realizations(d)
    assert len(reals) == 1
    assert is_hereditary_unigraph_bruteforce(reals[0])
    assert recognize(d)


@pytest.mark.parametrize("seed", range(8))
def test_large_sequences_pass_both_sequence_routes(seed):
    d = synthetic_hereditary_sequence(500, seed=seed)
    assert is_graphic(d) and len(d) >= 500
    assert recognize(d)
    assert hereditary_component(d).value


def test_deterministic():
    a = synthetic_hereditary_sequence(1000, seed=4)
    b = synthetic_hereditary_sequence(1000, seed=4)
    assert np.array_equal(a, b)


def test_bad_tail_kind():
    with pytest.raises(ValueError):
        _tail("P5", 1, 1)
