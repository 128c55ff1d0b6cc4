"""Class membership: forbidden-subgraph, structural and degree-sequence routes.

Most predicates accept a ``Graph`` or a degree sequence. With a graph every
available route is evaluated and a disagreement raises
:class:`RouteDisagreement`; with a sequence only the degree routes apply.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _core
from . import catalog as cat
from .decomposition import CanonicalDecomposition, decompose, decompose_sequence
from .errors import NotGraphic, RouteDisagreement, UnigraphsError
from .graph import Graph, complement, mask
from .iso import first_induced, is_isomorphic
from .sequence import as_sequence, m_of, normalize, require_graphic
from .spiders import (
    SpiderCertificate,
    recognize_bottom_expanded,
    recognize_expanded_spider,
    recognize_spider,
    recognize_top_expanded,
    split_partition,
)

ROUTES = ("forbidden", "structural", "component", "sequence")


@dataclass(frozen=True)
class RouteResult:
    value: bool
    route: str
    certificate: dict = field(default_factory=dict, compare=False)


def _witness(g: Graph, family: dict) -> dict | None:
    hit = first_induced(g, family)
    if hit is None:
        return None
    return {"name": hit[0], "embedding": list(hit[1])}


def _agree(name: str, results: list[RouteResult]) -> RouteResult:
    if len({r.value for r in results}) > 1:
        raise RouteDisagreement(name, {r.route: {"value": r.value, **r.certificate} for r in results})
    return results[0]


# ---- threshold / split / pseudo-split --------------------------------------

def threshold_sequence(d) -> RouteResult:
    prof = require_graphic(d)
    eg = prof.eg.tolist()
    ok = len(eg) > prof.m and eg[prof.m] == prof.m
    return RouteResult(ok, "sequence", {"eg": eg, "m": prof.m})


def split_sequence(d) -> RouteResult:
    prof = require_graphic(d)
    return RouteResult(prof.m in set(prof.eg.tolist()), "sequence", {"m": prof.m})


def pseudo_split_sequence(d) -> RouteResult:
    d = as_sequence(d)
    prof = require_graphic(d)
    if prof.m in set(prof.eg.tolist()):
        return RouteResult(True, "sequence", {"split": True})
    t = d.terms
    n = len(t)
    idx = np.arange(1, n + 1)
    q = int(np.count_nonzero(t >= idx + 4))
    ok = (
        n >= q + 5
        and bool(np.all(t[q:q + 5] == q + 2))
        and int(t[:q].sum()) == q * (q + 4) + int(t[q + 5:].sum())
    )
    return RouteResult(ok, "sequence", {"split": False, "q": q})


def _graph_family(g: Graph, family: dict, route: str = "forbidden") -> RouteResult:
    w = _witness(g, family)
    return RouteResult(w is None, route, {"witness": w} if w else {})


def is_threshold(x) -> bool:
    if isinstance(x, Graph):
        return _agree("threshold", [
            _graph_family(x, cat.THRESHOLD_FORBIDDEN),
            threshold_sequence(x.degree_sequence()),
        ]).value
    return threshold_sequence(x).value


def is_split(x) -> bool:
    if isinstance(x, Graph):
        return _agree("split", [
            _graph_family(x, cat.SPLIT_FORBIDDEN),
            split_sequence(x.degree_sequence()),
        ]).value
    return split_sequence(x).value


def pseudo_split_partition(g: Graph) -> tuple[frozenset, frozenset, frozenset] | None:
    """(A, B, C): A independent, B clique, C empty or an induced C5 complete
    to B and anticomplete to A. None when no such partition exists."""
    part = split_partition(g)
    if part is not None:
        return part[0], part[1], frozenset()
    emb = first_induced(g, {"C5": cat.Cn(5)})
    if emb is None:
        return None
    c = frozenset(emb[1])
    cm = mask(c)
    rest = [v for v in range(g.n) if v not in c]
    b = frozenset(v for v in rest if g.rows[v] & cm == cm)
    a = frozenset(v for v in rest if not g.rows[v] & cm)
    if len(a) + len(b) != len(rest):
        return None
    am, bm = mask(a), mask(b)
    if any(g.rows[v] & am for v in a) or any((g.rows[v] | 1 << v) & bm != bm for v in b):
        return None
    return a, b, c


def is_pseudo_split(x) -> bool:
    if isinstance(x, Graph):
        part = pseudo_split_partition(x)
        return _agree("pseudoSplit", [
            _graph_family(x, cat.PSEUDO_SPLIT_FORBIDDEN),
            RouteResult(part is not None, "structural"),
            pseudo_split_sequence(x.degree_sequence()),
        ]).value
    return pseudo_split_sequence(x).value


# ---- chair / kite, class G ------------------------------------------------

def _pseudo_split_tail_ok(cd: CanonicalDecomposition) -> bool:
    return cd.tail is None or is_isomorphic(cd.tail, cat.Cn(5))


def _components_structural(cd: CanonicalDecomposition, test) -> tuple[bool, dict]:
    if not _pseudo_split_tail_ok(cd):
        return False, {"tail": "not split and not C5"}
    for i, c in enumerate(cd.components):
        if c.splitted.n > 1 and not test(c.splitted.g):
            return False, {"component": i}
    return True, {}


def is_chair_free(g: Graph) -> bool:
    """{2K2, C4, chair}-free."""
    cd = decompose(g)
    ok, cert = _components_structural(cd, lambda h: recognize_top_expanded(h) is not None)
    return _agree("chairFree2K2C4", [
        _graph_family(g, cat.CHAIR_FREE_FORBIDDEN),
        RouteResult(ok, "structural", cert),
    ]).value


def is_kite_free(g: Graph) -> bool:
    """{2K2, C4, kite}-free."""
    cd = decompose(g)
    ok, cert = _components_structural(cd, lambda h: recognize_bottom_expanded(h) is not None)
    return _agree("kiteFree2K2C4", [
        _graph_family(g, cat.KITE_FREE_FORBIDDEN),
        RouteResult(ok, "structural", cert),
    ]).value


def is_class_G(g: Graph) -> bool:
    """{2K2, C4, R, R-bar}-free; structurally, components are spiders with
    body vertices and feet both allowed to expand."""
    cd = decompose(g)
    ok, cert = _components_structural(cd, lambda h: recognize_expanded_spider(h) is not None)
    return _agree("classG", [
        _graph_family(g, cat.CLASS_G_FORBIDDEN),
        RouteResult(ok, "structural", cert),
    ]).value


def _top_or_bottom_degrees(seq: tuple) -> bool:
    """Degree test for a split indecomposable component with > 1 vertex:
    top-expanded or bottom-expanded spider."""
    p = len(seq)
    mm = m_of(seq)
    top, low = seq[:mm], seq[mm:]
    if top and all(x == top[0] for x in top) and top[0] in (mm, p - 2):
        return True
    return bool(low) and all(x == low[0] for x in low) and low[0] in (1, mm - 1)


def forcibly_class_G_sequence(d) -> RouteResult:
    """Pseudo-split and every split component chair-free or kite-free."""
    d = as_sequence(d)
    if not pseudo_split_sequence(d).value:
        return RouteResult(False, "sequence", {"reason": "not pseudo-split"})
    for i, c in enumerate(decompose_sequence(d).components):
        if not c.trivial and not _top_or_bottom_degrees(c.sequence):
            return RouteResult(False, "sequence", {"component": i, "slot": list(c.slot)})
    return RouteResult(True, "sequence")


def is_forcibly_class_G(x) -> bool:
    """Graph: {2K2, C4, R, R-bar, S, S-bar}-free, cross-checked against the
    component route. Sequence: the degree route only."""
    if not isinstance(x, Graph):
        return forcibly_class_G_sequence(x).value
    cd = decompose(x)
    ok, cert = _components_structural(
        cd,
        lambda h: recognize_top_expanded(h) is not None or recognize_bottom_expanded(h) is not None,
    )
    return _agree("forciblyClassG", [
        _graph_family(x, cat.FORCIBLY_CLASS_G_FORBIDDEN),
        RouteResult(ok, "structural", cert),
        forcibly_class_G_sequence(x.degree_sequence()),
    ]).value


is_forcibly_class_G_sequence = is_forcibly_class_G


# ---- non-split tails -------------------------------------------------------

def tail_form(seq, matrogenic: bool = False, matroidal: bool = False) -> str | None:
    """Name of the admissible non-split indecomposable shape with degree
    sequence ``seq`` (nonincreasing), or None. Empty input gives "empty"."""
    s = np.asarray(seq, dtype=np.int64)
    p = len(s)
    if p == 0:
        return "empty"
    first, last = int(s[0]), int(s[-1])
    regular = first == last
    if regular:
        if first == 2 and p == 5 and not matroidal:
            return "C5"
        if p % 2 == 0 and p >= 4:
            if first == 1:
                return "rK2"
            if first == p - 2:
                return "co-rK2"
    if matrogenic or matroidal or p < 5:
        return None
    # (r, 1^{2s+r}) with r >= 2, s >= 1
    r = first
    if r >= 2 and int(s[1]) == 1 and last == 1:
        rest = p - 1 - r
        if rest >= 2 and rest % 2 == 0:
            return "K1r+sK2"
    # ((2s+r-1)^{2s+r}, 2s)
    if last % 2 == 0 and last >= 2 and first == p - 2 and int(s[-2]) == first:
        if p - 1 - last >= 2:
            return "co-(K1r+sK2)"
    return None


def _tail_graph_form(h: Graph, matrogenic: bool = False, matroidal: bool = False) -> str | None:
    """Identify a non-split tail by isomorphism (with its complement)."""
    n = h.n
    cands = []
    if n == 5 and not matroidal:
        cands.append(("C5", cat.Cn(5)))
    if n % 2 == 0 and n >= 4:
        cands.append(("rK2", cat.rK2(n // 2)))
    if not (matrogenic or matroidal):
        for r in range(2, n):
            s2 = n - 1 - r
            if s2 >= 2 and s2 % 2 == 0:
                cands.append(("K1r+sK2", cat.K1rSK2(r, s2 // 2)))
    hc = complement(h)
    for name, c in cands:
        if is_isomorphic(h, c):
            return name
        if is_isomorphic(hc, c):
            return name if name == "C5" else "co-" + (name if name != "K1r+sK2" else "(K1r+sK2)")
    return None


# ---- hereditary unigraphs --------------------------------------------------

def hereditary_forbidden(g: Graph) -> RouteResult:
    return _graph_family(g, cat.HEREDITARY_UNIGRAPH_FORBIDDEN)


def _spider_dict(c: SpiderCertificate | None) -> dict | None:
    return None if c is None else c.to_dict()


def hereditary_structural(g: Graph, cd: CanonicalDecomposition | None = None) -> RouteResult:
    cd = cd or decompose(g)
    certs = []
    for i, c in enumerate(cd.components):
        h = c.splitted.g
        if h.n == 1:
            continue
        cert = recognize_top_expanded(h) or recognize_bottom_expanded(h)
        if cert is None:
            return RouteResult(False, "structural", {"component": i, "vertices": list(c.vertices)})
        certs.append({"component": i, "spider": cert.to_dict()})
    tail = None
    if cd.tail is not None:
        tail = _tail_graph_form(cd.tail)
        if tail is None:
            return RouteResult(False, "structural", {"tail": list(cd.tail_vertices)})
    return RouteResult(True, "structural", {"spiders": certs, "tail": tail})


def hereditary_component(d) -> RouteResult:
    """Per-component degree test on the sequence decomposition."""
    sd = decompose_sequence(d)
    for i, c in enumerate(sd.components):
        if not c.trivial and not _top_or_bottom_degrees(c.sequence):
            return RouteResult(False, "component", {"component": i, "slot": list(c.slot)})
    if sd.tail and tail_form(sd.tail) is None:
        return RouteResult(False, "component", {"tail": list(sd.tail)})
    return RouteResult(True, "component")


def _scan_arrays(terms, eg, conj, both: bool, matrogenic: bool = False,
                 matroidal: bool = False) -> tuple[bool, dict]:
    bad = _core.hu_scan(terms, eg, conj, both)
    if bad >= 0:
        return False, {"slot": [int(eg[bad]), int(eg[bad + 1])]}
    t = int(eg[-1])
    hi = int(conj[t + 1])
    tail = terms[t:hi] - t if hi > t else terms[:0]
    if len(tail) and tail_form(tail, matrogenic, matroidal) is None:
        return False, {"tail": (tail + t).tolist(), "t": t}
    return True, {}


def _scan(d, both: bool, matrogenic: bool = False, matroidal: bool = False) -> tuple[bool, dict]:
    prof = require_graphic(d)
    return _scan_arrays(d.terms, prof.eg, prof.conj_full, both, matrogenic, matroidal)


def hereditary_sequence(d) -> RouteResult:
    ok, cert = _scan(as_sequence(d), both=False)
    return RouteResult(ok, "sequence", cert)


def recognize(d) -> bool:
    """Linear-time hereditary-unigraph test on a degree sequence.

    Accepts any integer array; sorts (counting sort) only when the input is
    not already nonincreasing. Raises NotGraphic.
    """
    a = np.ascontiguousarray(d, dtype=np.int64)
    res = _core.eg_points(a)
    if res is None:
        a = normalize(a).terms
        res = _core.eg_points(a)
    eg, conj, graphic = res
    if not graphic:
        raise NotGraphic("degree sequence is not graphic")
    return _scan_arrays(a, eg, conj, both=False)[0]


def is_hereditary_unigraph(x, route: str | None = None) -> bool:
    return hereditary_report(x, route).value


def hereditary_report(x, route: str | None = None) -> RouteResult:
    """Evaluate the selected route, or every applicable route (must agree)."""
    if route is not None and route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    if isinstance(x, Graph):
        d = x.degree_sequence()
        fns = {
            "forbidden": lambda: hereditary_forbidden(x),
            "structural": lambda: hereditary_structural(x),
            "component": lambda: hereditary_component(d),
            "sequence": lambda: hereditary_sequence(d),
        }
    else:
        d = as_sequence(x)
        require_graphic(d)
        fns = {"component": lambda: hereditary_component(d), "sequence": lambda: hereditary_sequence(d)}
        if route in ("forbidden", "structural"):
            raise UnigraphsError(f"route {route!r} needs a graph")
    if route is not None:
        return fns[route]()
    results = [f() for f in fns.values()]
    out = _agree("hereditaryUnigraph", results)
    cert = {}
    for r in results:
        if r.certificate:
            cert[r.route] = r.certificate
    return RouteResult(out.value, "all", cert)


# ---- matrogenic / matroidal ------------------------------------------------

def matrogenic_structural(g: Graph, cd: CanonicalDecomposition | None = None, matroidal: bool = False) -> RouteResult:
    cd = cd or decompose(g)
    for i, c in enumerate(cd.components):
        h = c.splitted.g
        if h.n == 1:
            continue
        cert = recognize_spider(h)
        if cert is None or cert.head is not None:
            return RouteResult(False, "structural", {"component": i})
    if cd.tail is not None and _tail_graph_form(cd.tail, matrogenic=True, matroidal=matroidal) is None:
        return RouteResult(False, "structural", {"tail": list(cd.tail_vertices)})
    return RouteResult(True, "structural")


def matrogenic_sequence(d, matroidal: bool = False) -> RouteResult:
    ok, cert = _scan(as_sequence(d), both=True, matrogenic=True, matroidal=matroidal)
    return RouteResult(ok, "sequence", cert)


def is_matrogenic(x) -> bool:
    if isinstance(x, Graph):
        return _agree("matrogenic", [
            matrogenic_structural(x),
            matrogenic_sequence(x.degree_sequence()),
        ]).value
    return matrogenic_sequence(x).value


def is_matroidal(x) -> bool:
    """C5-free matrogenic."""
    if isinstance(x, Graph):
        return _agree("matroidal", [
            matrogenic_structural(x, matroidal=True),
            matrogenic_sequence(x.degree_sequence(), matroidal=True),
            RouteResult(is_matrogenic(x) and first_induced(x, {"C5": cat.Cn(5)}) is None, "definition"),
        ]).value
    return matrogenic_sequence(x, matroidal=True).value


# ---- report ----------------------------------------------------------------

FIELDS = (
    "threshold", "split", "pseudoSplit", "chairFree2K2C4", "kiteFree2K2C4",
    "classG", "forciblyClassG", "matroidal", "matrogenic", "hereditaryUnigraph",
    "unigraphDeskScale",
)

# (smaller, larger): membership in the first implies membership in the second
TOWER = (
    ("threshold", "matroidal"),
    ("matroidal", "matrogenic"),
    ("matrogenic", "hereditaryUnigraph"),
    ("hereditaryUnigraph", "unigraphDeskScale"),
    ("threshold", "split"),
    ("split", "pseudoSplit"),
    ("chairFree2K2C4", "forciblyClassG"),
    ("kiteFree2K2C4", "forciblyClassG"),
    ("forciblyClassG", "classG"),
)


@dataclass(frozen=True)
class ClassReport:
    n: int
    values: dict
    witnesses: dict
    certificates: dict

    def __getitem__(self, key: str):
        return self.values[key]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": {
                k: {"member": self.values[k], "witness": self.witnesses.get(k), "certificate": self.certificates.get(k)}
                for k in FIELDS
            },
        }


def classify(g: Graph, unigraph_oracle: bool = True) -> ClassReport:
    """Evaluate every class on ``g``; the tower implications are checked
    before returning. ``unigraphDeskScale`` uses the brute-force oracle
    (None above its size cap or when disabled)."""
    from . import oracle

    d = g.degree_sequence()
    vals = {
        "threshold": is_threshold(g),
        "split": is_split(g),
        "pseudoSplit": is_pseudo_split(g),
        "chairFree2K2C4": is_chair_free(g),
        "kiteFree2K2C4": is_kite_free(g),
        "classG": is_class_G(g),
        "forciblyClassG": is_forcibly_class_G(g),
        "matroidal": is_matroidal(g),
        "matrogenic": is_matrogenic(g),
    }
    her = hereditary_report(g)
    vals["hereditaryUnigraph"] = her.value
    vals["unigraphDeskScale"] = (
        oracle.count_realizations(d) == 1 if unigraph_oracle and g.n <= oracle.MAX_N else None
    )
    families = {
        "threshold": cat.THRESHOLD_FORBIDDEN,
        "split": cat.SPLIT_FORBIDDEN,
        "pseudoSplit": cat.PSEUDO_SPLIT_FORBIDDEN,
        "chairFree2K2C4": cat.CHAIR_FREE_FORBIDDEN,
        "kiteFree2K2C4": cat.KITE_FREE_FORBIDDEN,
        "classG": cat.CLASS_G_FORBIDDEN,
        "forciblyClassG": cat.FORCIBLY_CLASS_G_FORBIDDEN,
        "hereditaryUnigraph": cat.HEREDITARY_UNIGRAPH_FORBIDDEN,
    }
    wits = {k: _witness(g, fam) for k, fam in families.items() if not vals[k]}
    if not vals["matroidal"] and vals["matrogenic"]:
        wits["matroidal"] = _witness(g, {"C5": cat.Cn(5)})
    certs = {"hereditaryUnigraph": her.certificate or None}
    if vals["pseudoSplit"]:
        a, b, c = pseudo_split_partition(g)
        certs["pseudoSplit"] = {"A": sorted(a), "B": sorted(b), "C": sorted(c)}
    for small, big in TOWER:
        if vals[small] and vals[big] is False:
            raise RouteDisagreement(f"{small}=>{big}", {"graph6": g.to_graph6(), small: True, big: False})
    return ClassReport(g.n, vals, wits, certs)


def classify_sequence(d) -> dict:
    """Sequence-level verdicts (the degree routes only)."""
    d = as_sequence(d)
    prof = require_graphic(d)
    her = hereditary_report(d)
    return {
        "threshold": threshold_sequence(d).value,
        "split": split_sequence(d).value,
        "pseudoSplit": pseudo_split_sequence(d).value,
        "forciblyClassG": forcibly_class_G_sequence(d).value,
        "matroidal": matrogenic_sequence(d, matroidal=True).value,
        "matrogenic": matrogenic_sequence(d).value,
        "hereditaryUnigraph": her.value,
        "hereditaryCertificate": her.certificate or None,
        "m": prof.m,
    }


__all__ = [
    "RouteResult", "ClassReport", "FIELDS", "TOWER", "ROUTES",
    "is_threshold", "is_split", "is_pseudo_split", "pseudo_split_partition",
    "is_chair_free", "is_kite_free", "is_class_G", "is_forcibly_class_G",
    "is_forcibly_class_G_sequence", "forcibly_class_G_sequence",
    "is_hereditary_unigraph", "hereditary_report", "recognize", "tail_form",
    "is_matrogenic", "is_matroidal", "classify", "classify_sequence",
    "threshold_sequence", "split_sequence", "pseudo_split_sequence",
]
