"""Prime spiders and their top/bottom expansions."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced, mask


@dataclass(frozen=True)
class SpiderCertificate:
    """Feet A, body B, optional head, and the foot-to-body bijection.

    ``matching`` pairs blocks: for a prime spider each block is a single
    vertex; for an expanded spider a block is the set substituted for one
    quotient vertex (clique blocks on the body side, independent blocks on
    the feet side). ``expansion`` is "none", "top", "bottom" or "both".
    """

    feet: tuple
    body: tuple
    head: int | None
    kind: str  # "thin": foot sees only its partner; "thick": foot misses only its partner
    matching: tuple  # ((foot block), (body block)) pairs
    expansion: str = "none"

    @property
    def headless(self) -> bool:
        return self.head is None

    @property
    def size(self) -> int:
        """|A| = |B| of the underlying prime spider."""
        return len(self.matching)

    def to_dict(self) -> dict:
        return {
            "feet": list(self.feet),
            "body": list(self.body),
            "head": self.head,
            "kind": self.kind,
            "matching": [[list(a), list(b)] for a, b in self.matching],
            "expansion": self.expansion,
        }


def recognize_spider(g: Graph) -> SpiderCertificate | None:
    """Certificate when ``g`` is a prime spider (headed or headless), else None.

    In any prime spider the body consists of the |B| vertices of largest
    degree, strictly above everything else, so only one partition needs
    checking. For |A| = |B| = 2 the two kinds coincide and "thin" is reported.
    """
    n = g.n
    if n < 4:
        return None
    k = n // 2
    degs = g.degrees()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    if degs[order[k - 1]] == degs[order[k]]:
        return None
    body = sorted(order[:k])
    rest = order[k:]
    bm = mask(body)
    rows = g.rows
    for b in body:
        if (rows[b] | (1 << b)) & bm != bm:
            return None
    head = None
    if n % 2:
        heads = [v for v in rest if rows[v] & bm == bm]
        if len(heads) != 1:
            return None
        head = heads[0]
    feet = sorted(v for v in rest if v != head)
    fm = mask(feet)
    for a in feet:
        if rows[a] & fm:
            return None
    if head is not None and rows[head] & fm:
        return None

    for kind, want in (("thin", 1), ("thick", k - 1)):
        pairs = []
        hit = 0
        for a in feet:
            nb = rows[a] & bm
            if nb.bit_count() != want:
                break
            partner = nb if kind == "thin" else bm & ~nb
            if partner & hit:
                break
            hit |= partner
            pairs.append(((a,), (partner.bit_length() - 1,)))
        else:
            return SpiderCertificate(tuple(feet), tuple(body), head, kind, tuple(pairs))
    return None


def split_partition(g: Graph) -> tuple[frozenset, frozenset] | None:
    """(A, B) with B the m(d) highest-degree vertices when that is a split
    partition; None when g is not split."""
    n = g.n
    degs = g.degrees()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    m = 0
    while m < n and degs[order[m]] >= m:
        m += 1
    b = order[:m]
    bm, am = mask(b), mask(order[m:])
    for v in b:
        if (g.rows[v] | (1 << v)) & bm != bm:
            return None
    for v in order[m:]:
        if g.rows[v] & am:
            return None
    return frozenset(order[m:]), frozenset(b)


def _twin_blocks(g: Graph, side, closed: bool) -> list[tuple]:
    groups: dict[int, list] = {}
    for v in sorted(side):
        key = g.rows[v] | (1 << v) if closed else g.rows[v]
        groups.setdefault(key, []).append(v)
    return sorted(tuple(b) for b in groups.values())


def recognize_expanded_spider(g: Graph, top: bool = True, bottom: bool = True) -> SpiderCertificate | None:
    """Headless spider with cliques substituted for body vertices (``top``)
    and/or edgeless graphs for feet (``bottom``).

    Body twins (same closed neighbourhood) and feet twins (same open
    neighbourhood) are contracted to one representative each; the quotient
    must then be a headless prime spider whose body is the contracted clique.
    """
    part = split_partition(g)
    if part is None or g.n < 4:
        return None
    a, b = part
    bblocks = _twin_blocks(g, b, True) if top else [(v,) for v in sorted(b)]
    ablocks = _twin_blocks(g, a, False) if bottom else [(v,) for v in sorted(a)]
    reps = sorted(blk[0] for blk in bblocks + ablocks)
    block_of = {blk[0]: blk for blk in bblocks + ablocks}
    q = induced(g, reps)
    cert = recognize_spider(q)
    if cert is None or cert.head is not None:
        return None
    if {reps[i] for i in cert.body} != {blk[0] for blk in bblocks}:
        return None
    pairs = tuple(
        (block_of[reps[fa[0]]], block_of[reps[fb[0]]]) for fa, fb in cert.matching
    )
    big_b = any(len(x) > 1 for x in bblocks)
    big_a = any(len(x) > 1 for x in ablocks)
    expansion = {(False, False): "none", (True, False): "top", (False, True): "bottom", (True, True): "both"}[
        (big_b, big_a)
    ]
    kind = cert.kind
    return SpiderCertificate(tuple(sorted(a)), tuple(sorted(b)), None, kind, pairs, expansion)


def recognize_top_expanded(g: Graph) -> SpiderCertificate | None:
    return recognize_expanded_spider(g, top=True, bottom=False)


def recognize_bottom_expanded(g: Graph) -> SpiderCertificate | None:
    return recognize_expanded_spider(g, top=False, bottom=True)


def is_net(g: Graph) -> bool:
    c = recognize_spider(g)
    return c is not None and c.head is None and c.kind == "thin"


def is_co_net(g: Graph) -> bool:
    c = recognize_spider(g)
    return c is not None and c.head is None and (c.kind == "thick" or c.size == 2)


def neighbor_and_nonneighbor(g: Graph, a, b) -> bool:
    """Every A-vertex has a neighbour and a non-neighbour in B and vice versa."""
    am, bm = mask(a), mask(b)
    for v in a:
        nb = g.rows[v] & bm
        if nb == 0 or nb == bm:
            return False
    for v in b:
        nb = g.rows[v] & am
        if nb == 0 or nb == am:
            return False
    return True


__all__ = [
    "SpiderCertificate", "recognize_spider", "recognize_top_expanded",
    "recognize_bottom_expanded", "recognize_expanded_spider", "split_partition",
    "is_net", "is_co_net", "neighbor_and_nonneighbor",
]
