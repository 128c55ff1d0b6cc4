"""Named graphs with fixed vertex numbering.

Numbering conventions (stable, relied on by tests and CLI output):

* ``Kn``, ``Cn``, ``Pn``: 0..n-1; cycle and path edges join i and i+1.
* ``Kmn(m, n)``: parts 0..m-1 and m..m+n-1.
* ``chair``: a, e, d, b, c -> 0..4 with edges a-e, e-d, d-b, d-c (d has degree 3).
* ``kite``: v, z, w, y, x -> 0..4; triangle z, y, x, w joined to y and x,
  v pendant at z.
* ``R``, ``S``, ``Sbar``: the six vertices in a fixed reading order
  (top row left to right, then bottom row), see the edge lists below.
  ``Rbar`` is the complement of ``R`` on the same numbering.
* ``fourPan``: 4-cycle 0-1-2-3 with pendant 4 at 0.
* ``Us(s)``: merged vertex 0, 4-cycle 0-1-2-3, triangles {0, 4+2i, 5+2i}.
* ``net(k)``: body clique 0..k-1, foot k+i pendant at body vertex i.
* ``rK2(r)``: edges 2i-(2i+1).
* ``K1rSK2(r, s)``: star centre 0 with leaves 1..r, then s disjoint edges.
* ``co*`` names are complements of the corresponding graph, same numbering.
"""

from __future__ import annotations

from typing import Callable

from .graph import Graph, complement, disjoint_union

# edge lists in a fixed vertex order
_CHAIR = [(0, 1), (1, 2), (2, 3), (2, 4)]
_KITE = [(0, 1), (1, 3), (1, 4), (3, 4), (3, 2), (4, 2)]
_R = [(0, 1), (1, 2), (1, 4), (1, 5), (2, 5), (3, 4), (4, 5)]
_S = [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
_SBAR = [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5)]


def Kn(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def Cn(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def Pn(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def Kmn(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def chair() -> Graph:
    return Graph.from_edges(5, _CHAIR)


def kite() -> Graph:
    return Graph.from_edges(5, _KITE)


def R() -> Graph:
    return Graph.from_edges(6, _R)


def Rbar() -> Graph:
    return complement(R())


def S() -> Graph:
    return Graph.from_edges(6, _S)


def Sbar() -> Graph:
    return Graph.from_edges(6, _SBAR)


def fourPan() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def coFourPan() -> Graph:
    return complement(fourPan())


def Us(s: int) -> Graph:
    if s < 1:
        raise ValueError("Us needs s >= 1")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for i in range(s):
        a, b = 4 + 2 * i, 5 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(4 + 2 * s, edges)


def net(k: int) -> Graph:
    if k < 2:
        raise ValueError("net needs k >= 2")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def coNet(k: int) -> Graph:
    return complement(net(k))


def rK2(r: int) -> Graph:
    return Graph.from_edges(2 * r, [(2 * i, 2 * i + 1) for i in range(r)])


def K1rSK2(r: int, s: int) -> Graph:
    return disjoint_union(Kmn(1, r), rK2(s))


def twoP3() -> Graph:
    return disjoint_union(Pn(3), Pn(3))


def coTwoP3() -> Graph:
    return complement(twoP3())


def K2plusK3() -> Graph:
    return disjoint_union(Kn(2), Kn(3))


def K2plusP4() -> Graph:
    return disjoint_union(Kn(2), Pn(4))


def coK2plusP4() -> Graph:
    return complement(K2plusP4())


def K2plusC4() -> Graph:
    return disjoint_union(Kn(2), Cn(4))


def coK2plusC4() -> Graph:
    return complement(K2plusC4())


def K23() -> Graph:
    return Kmn(2, 3)


def P5() -> Graph:
    return Pn(5)


def coP5() -> Graph:
    return complement(Pn(5))


CATALOG: dict[str, Callable[..., Graph]] = {
    "Kn": Kn, "Cn": Cn, "Pn": Pn, "Kmn": Kmn, "empty": empty,
    "chair": chair, "kite": kite, "fourPan": fourPan, "coFourPan": coFourPan,
    "R": R, "Rbar": Rbar, "S": S, "Sbar": Sbar, "Us": Us,
    "net": net, "coNet": coNet, "twoP3": twoP3, "coTwoP3": coTwoP3,
    "K2plusK3": K2plusK3, "K2plusP4": K2plusP4, "coK2plusP4": coK2plusP4,
    "K2plusC4": K2plusC4, "coK2plusC4": coK2plusC4, "K23": K23,
    "P5": P5, "coP5": coP5, "rK2": rK2, "K1rSK2": K1rSK2,
}


def named(name: str, *params: int) -> Graph:
    try:
        return CATALOG[name](*params)
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}") from None


def _family(*names: str) -> dict[str, Graph]:
    table = {"2K2": rK2(2), "C4": Cn(4), "C5": Cn(5), "P4": Pn(4)}
    return {nm: table[nm] if nm in table else named(nm) for nm in names}


# forbidden induced subgraphs, in the order used for witness reporting
HEREDITARY_UNIGRAPH_FORBIDDEN = _family(
    "P5", "coP5", "K2plusK3", "K23", "fourPan", "coFourPan", "twoP3", "coTwoP3",
    "K2plusP4", "coK2plusP4", "K2plusC4", "coK2plusC4", "R", "Rbar", "S", "Sbar",
)
THRESHOLD_FORBIDDEN = _family("2K2", "C4", "P4")
SPLIT_FORBIDDEN = _family("2K2", "C4", "C5")
PSEUDO_SPLIT_FORBIDDEN = _family("2K2", "C4")
CHAIR_FREE_FORBIDDEN = _family("2K2", "C4", "chair")
KITE_FREE_FORBIDDEN = _family("2K2", "C4", "kite")
CLASS_G_FORBIDDEN = _family("2K2", "C4", "R", "Rbar")
FORCIBLY_CLASS_G_FORBIDDEN = _family("2K2", "C4", "R", "Rbar", "S", "Sbar")
