"""Verification properties swept by :func:`unigraphs.oracle.verify`.

Each check receives one graph and returns None when the property holds or a
short message describing the failure.
"""

from __future__ import annotations

import random

from . import catalog as cat
from .classes import (
    TOWER,
    classify,
    forcibly_class_G_sequence,
    hereditary_component,
    hereditary_forbidden,
    hereditary_sequence,
    hereditary_structural,
    is_hereditary_unigraph,
    is_pseudo_split,
    pseudo_split_sequence,
    split_sequence,
    threshold_sequence,
    _top_or_bottom_degrees,
)
from .decomposition import (
    complement_decomposition,
    decompose,
    decompose_sequence,
    is_indecomposable,
)
from .graph import Graph, bits, complement, induced, mask, relabel
from .iso import canonical_form, find_induced, is_free, is_isomorphic
from .oracle import (
    HEREDITARY_MAX_N,
    Property,
    count_realizations,
    is_forcibly_free,
    is_hereditary_unigraph_bruteforce,
    realizations,
    realizations_by_enumeration,
    register,
)
from .sequence import m_of
from .spiders import neighbor_and_nonneighbor, recognize_bottom_expanded, recognize_top_expanded


def _routes(g: Graph) -> str | None:
    d = g.degree_sequence()
    vals = {
        "forbidden": hereditary_forbidden(g).value,
        "structural": hereditary_structural(g).value,
        "component": hereditary_component(d).value,
        "sequence": hereditary_sequence(d).value,
    }
    return None if len(set(vals.values())) == 1 else f"routes differ: {vals}"


def _routes_oracle(g: Graph) -> str | None:
    want = is_hereditary_unigraph_bruteforce(g)
    got = is_hereditary_unigraph(g)
    return None if want == got else f"oracle {want}, library {got}"


def _forcibly(g: Graph) -> str | None:
    d = g.degree_sequence()
    a = is_forcibly_free(d, cat.CLASS_G_FORBIDDEN)
    cd = decompose(g)
    parts = [c.splitted.g for c in cd.components] + ([cd.tail] if cd.tail is not None else [])
    b = is_pseudo_split(g) and all(
        find_induced(h, cat.chair()) is None or find_induced(h, cat.kite()) is None for h in parts
    )
    c = is_free(g, cat.FORCIBLY_CLASS_G_FORBIDDEN)
    s = forcibly_class_G_sequence(d).value
    if a == b == c == s:
        return None
    return f"(a)={a} (b)={b} (c)={c} sequence={s}"


def _degree_criteria(g: Graph) -> str | None:
    d = g.degree_sequence()
    pairs = {
        "threshold": (threshold_sequence(d).value, is_free(g, cat.THRESHOLD_FORBIDDEN)),
        "split": (split_sequence(d).value, is_free(g, cat.SPLIT_FORBIDDEN)),
        "pseudoSplit": (pseudo_split_sequence(d).value, is_free(g, cat.PSEUDO_SPLIT_FORBIDDEN)),
    }
    bad = {k: v for k, v in pairs.items() if v[0] != v[1]}
    return None if not bad else f"sequence vs forbidden: {bad}"


def _roundtrip(g: Graph) -> str | None:
    cd = decompose(g)
    if not is_isomorphic(cd.recompose(), g):
        return "recompose not isomorphic"
    if cd.recompose_labeled() != g:
        return "labelled recomposition differs"
    for i, c in enumerate(cd.components):
        s = c.splitted
        if not is_indecomposable(s.g):
            return f"component {i} decomposable"
        if s.n > 1 and not neighbor_and_nonneighbor(s.g, s.a, s.b):
            return f"component {i} violates neighbour/non-neighbour"
    if cd.tail is not None:
        if not is_indecomposable(cd.tail) or is_free(cd.tail, cat.SPLIT_FORBIDDEN):
            return "tail is decomposable or split"
    perm = list(range(g.n))
    random.Random(g.n * 7919 + g.num_edges()).shuffle(perm)
    if decompose(relabel(g, perm)).key() != cd.key():
        return "decomposition not invariant under relabelling"
    return None


def _graph_component_sequences(g: Graph) -> list[tuple]:
    cd = decompose(g)
    out = [c.splitted.g.degree_sequence().as_tuple() for c in cd.components]
    if cd.tail is not None:
        out.append(cd.tail.degree_sequence().as_tuple())
    return out


def _sequence_matches(g: Graph) -> str | None:
    cd = decompose(g)
    sd = decompose_sequence(g.degree_sequence())
    got = sd.component_sequences()
    want = _graph_component_sequences(g)
    if got != want:
        return f"sequence route {got} vs graph {want}"
    for c, sc in zip(cd.components, sd.components):
        degs = c.splitted.g.degrees()
        b = tuple(sorted((degs[i] for i in c.splitted.b), reverse=True))
        a = tuple(sorted((degs[i] for i in c.splitted.a), reverse=True))
        if (b, a) != (sc.b_part, sc.a_part):
            return f"A/B parts differ at slot {sc.slot}"
    return None


def _complement_commutes(g: Graph) -> str | None:
    left = decompose(complement(g)).key()
    right = complement_decomposition(decompose(g)).key()
    return None if left == right else "complement does not commute with decomposition"


def eg_equality_holds(g: Graph, q: int) -> bool:
    """Both directions of the Erdos-Gallai equality characterization for one
    vertex set (bitmask): equality at |Q| iff Q is a clique, P = {degree < |Q|}
    outside Q is independent, Q is complete to T and P misses T."""
    n = g.n
    degs = g.degrees()
    qs = bits(q)
    k = len(qs)
    others = [v for v in range(n) if not q >> v & 1]
    equal = sum(degs[v] for v in qs) == k * (k - 1) + sum(min(k, degs[v]) for v in others)
    p = mask(v for v in others if degs[v] < k)
    t = mask(v for v in others if degs[v] >= k)
    rows = g.rows
    structure = (
        all((rows[v] | 1 << v) & q == q for v in qs)
        and all(not rows[v] & p for v in bits(p))
        and all(rows[v] & t == t for v in qs)
        and all(not rows[v] & t for v in bits(p))
    )
    return equal == structure


def _eg_equality(g: Graph) -> str | None:
    for q in range(1 << g.n):
        if not eg_equality_holds(g, q):
            return f"equality characterization fails for Q={bits(q)}"
    return None


def _tower(g: Graph) -> str | None:
    rep = classify(g)  # raises on any route disagreement or broken implication
    v = rep.values
    n = g.n
    complete = g.num_edges() == n * (n - 1) // 2
    edgeless = g.num_edges() == 0
    if (complete or edgeless) and not v["threshold"]:
        return "complete/edgeless graph not threshold"
    for small, big in TOWER:
        if v[small] and not v[big]:
            return f"{small} but not {big}"
    return None


def _hereditary_closure(g: Graph) -> str | None:
    if not is_hereditary_unigraph(g):
        return None
    for v in range(g.n):
        if not is_hereditary_unigraph(induced(g, [u for u in range(g.n) if u != v])):
            return f"deleting {v} leaves a non-member"
    return None


def _component_reduction(g: Graph) -> str | None:
    cd = decompose(g)
    parts = [c.splitted.g for c in cd.components] + ([cd.tail] if cd.tail is not None else [])
    whole = is_hereditary_unigraph(g)
    each = all(is_hereditary_unigraph(h) for h in parts)
    return None if whole == each else f"graph {whole}, components {each}"


def _complement_closure(g: Graph) -> str | None:
    a, b = is_hereditary_unigraph(g), is_hereditary_unigraph(complement(g))
    return None if a == b else f"graph {a}, complement {b}"


def _spider_degrees(g: Graph) -> str | None:
    if g.n < 2 or not is_indecomposable(g) or not is_free(g, cat.SPLIT_FORBIDDEN):
        return None
    seq = g.degree_sequence().as_tuple()
    mm, p = m_of(seq), len(seq)
    top, low = seq[:mm], seq[mm:]
    top_deg = len(set(top)) == 1 and top[0] in (mm, p - 2)
    low_deg = len(set(low)) == 1 and low[0] in (1, mm - 1)
    te = recognize_top_expanded(g) is not None
    be = recognize_bottom_expanded(g) is not None
    if te != top_deg or be != low_deg:
        return f"top {te}/{top_deg}, bottom {be}/{low_deg}"
    if (te or be) != _top_or_bottom_degrees(seq):
        return "component degree test disagrees"
    return None


def _graph6_roundtrip(g: Graph) -> str | None:
    s = g.to_graph6()
    return None if Graph.from_graph6(s) == g and Graph.from_graph6(s).to_graph6() == s else "graph6 mismatch"


def _threshold_unigraph(g: Graph) -> str | None:
    if is_free(g, cat.THRESHOLD_FORBIDDEN) and count_realizations(g.degree_sequence()) != 1:
        return "threshold graph with several realizations"
    return None


def _realization_index(g: Graph) -> str | None:
    d = g.degree_sequence()
    a = sorted(canonical_form(h) for h in realizations(d))
    b = sorted(canonical_form(h) for h in realizations_by_enumeration(d))
    if a != b:
        return f"backtracking found {len(a)}, enumeration {len(b)}"
    if canonical_form(g) not in a:
        return "graph missing from its own realizations"
    return None


def _is_threshold_graph(g: Graph) -> bool:
    return is_free(g, cat.THRESHOLD_FORBIDDEN)


for _p in (
    Property("hered-uni-3routes", "forbidden, structural, component and sequence routes agree", _routes),
    Property("hered-uni-oracle", "library agrees with brute force over induced subgraphs",
             _routes_oracle, cap=HEREDITARY_MAX_N),
    Property("forcibly-free", "forcibly {2K2,C4,R,Rbar}-free equivalences", _forcibly, cap=7),
    Property("degree-criteria", "threshold/split/pseudo-split degree routes vs forbidden sets",
             _degree_criteria, tally=_is_threshold_graph,
             expected_tally=lambda n: 2 ** (n - 1) if n >= 1 else 1),
    Property("decompose-roundtrip", "recomposition, indecomposability, relabel invariance", _roundtrip),
    Property("decompose-sequence", "sequence decomposition matches graph decomposition", _sequence_matches),
    Property("complement-commutes", "complement commutes with decomposition", _complement_commutes, cap=7),
    Property("eg-lemma-split", "EG equality characterization in both directions, all vertex sets", _eg_equality, cap=7),
    Property("tower", "class inclusions, last arrow via the oracle", _tower, cap=7),
    Property("hereditary-closure", "members stay members under vertex deletion", _hereditary_closure, cap=7),
    Property("component-reduction", "member iff every canonical component is", _component_reduction, cap=7),
    Property("complement-closure", "member iff complement is", _complement_closure, cap=7),
    Property("spider-degrees", "expanded-spider recognizers match the degree conditions", _spider_degrees, cap=7),
    Property("graph6-roundtrip", "graph6 emit/parse is lossless", _graph6_roundtrip),
    Property("threshold-unigraph", "threshold sequences have one realization", _threshold_unigraph, cap=7),
    Property("realization-index", "backtracking realizations match enumeration", _realization_index, cap=7),
):
    register(_p)


def tower_strictness(max_n: int = 7) -> dict[str, str | None]:
    """For each inclusion of the tower, the first graph (by n, then enumeration
    order) in the larger class but not the smaller; graph6 or None."""
    from .oracle import enumerate_graphs

    steps = (
        ("complete", "threshold"),
        ("edgeless", "threshold"),
        ("threshold", "matroidal"),
        ("matroidal", "matrogenic"),
        ("matrogenic", "hereditaryUnigraph"),
        ("hereditaryUnigraph", "unigraphDeskScale"),
    )
    found: dict[str, str | None] = {f"{a}<{b}": None for a, b in steps}
    for n in range(max_n + 1):
        for g in enumerate_graphs(n):
            if all(found.values()):
                return found
            v = dict(classify(g).values)
            v["complete"] = g.num_edges() == n * (n - 1) // 2
            v["edgeless"] = g.num_edges() == 0
            for a, b in steps:
                key = f"{a}<{b}"
                if found[key] is None and v[b] and not v[a]:
                    found[key] = g.to_graph6()
    return found


__all__ = ["eg_equality_holds", "tower_strictness"]
