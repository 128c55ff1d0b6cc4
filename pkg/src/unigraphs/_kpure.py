"""Pure-Python kernels.

Reference implementations of the hot loops. ``_kext`` (Cython) mirrors every
function here with identical results; ``_core`` picks one at import time.
Graphs are passed as ``(n, rows)`` where ``rows[v]`` is the neighbourhood
bitmask of ``v``.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


# --------------------------------------------------------------------------
# canonical labelling
# --------------------------------------------------------------------------

def _refine(rows, cells):
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            split = True
            for s in keys:
                out.append([v for v in c if sig[v] == s])
        cells = out
        if not split:
            return cells


def canon_order(n, rows, colors=None):
    """Return the canonical vertex order: position ``i`` holds vertex ``order[i]``.

    Equitable refinement followed by individualisation; the leaf with the
    lexicographically largest relabelled row tuple wins. Branches on twin
    vertices are skipped since the twin transposition is an automorphism.
    """
    if n == 0:
        return []
    if colors is None:
        cells = [list(range(n))]
    else:
        cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best_cert = None
    best_order = None

    def leaf(cells):
        nonlocal best_cert, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            r = rows[v]
            x = 0
            while r:
                low = r & -r
                x |= 1 << pos[low.bit_length() - 1]
                r ^= low
            cert.append(x)
        cert = tuple(cert)
        if best_cert is None or cert > best_cert:
            best_cert = cert
            best_order = order

    def search(cells):
        idx = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                idx = i
                break
        if idx < 0:
            leaf(cells)
            return
        cell = cells[idx]
        tried = []
        for v in cell:
            bv = 1 << v
            if any((rows[u] & ~bv) == (rows[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            new = cells[:idx] + [[v], [u for u in cell if u != v]] + cells[idx + 1:]
            search(_refine(rows, new))

    search(_refine(rows, cells))
    return best_order


# --------------------------------------------------------------------------
# induced subgraph search
# --------------------------------------------------------------------------

def find_induced(hn, hrows, pn, prows):
    """First injective map (pattern index order, host ascending) whose image
    induces the pattern, as a tuple; ``None`` when absent."""
    if pn == 0:
        return ()
    if pn > hn:
        return None
    hdeg = [r.bit_count() for r in hrows]
    pdeg = [r.bit_count() for r in prows]
    image = [0] * pn

    def extend(i, used):
        low = prows[i] & ((1 << i) - 1)
        want = 0
        mapped = 0
        for j in range(i):
            mapped |= 1 << image[j]
            if (low >> j) & 1:
                want |= 1 << image[j]
        for x in range(hn):
            if (used >> x) & 1 or hdeg[x] < pdeg[i]:
                continue
            if hrows[x] & mapped != want:
                continue
            image[i] = x
            if i + 1 == pn or extend(i + 1, used | (1 << x)):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


# --------------------------------------------------------------------------
# degree-sequence scans
# --------------------------------------------------------------------------

def conjugate_counts(d):
    """``conj[j]`` = number of terms >= j for j = 0..n+1 (terms above n+1 clipped)."""
    n = len(d)
    c = np.bincount(np.minimum(d, n + 1), minlength=n + 2)
    return np.cumsum(c[::-1])[::-1].astype(np.int64)


def eg_scan(d):
    """Slack of every Erdos-Gallai inequality k = 0..n for descending ``d``.

    Returns ``(slack, conj)``; ``conj`` has n+2 entries.
    """
    d = np.asarray(d, dtype=np.int64)
    n = len(d)
    conj = conjugate_counts(d)
    prefix = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(d, out=prefix[1:])
    total = prefix[n]
    k = np.arange(n + 1, dtype=np.int64)
    ck = conj[: n + 1]
    slack = (
        k * (k - 1)
        + k * np.maximum(0, ck - k)
        + (total - prefix[np.maximum(k, ck)])
        - prefix
    )
    return slack, conj


def eg_points(d):
    """``(eg, conj, graphic)`` for the recognizer, or None when ``d`` is not a
    nonincreasing sequence of nonnegative terms."""
    d = np.asarray(d, dtype=np.int64)
    if d.size and (d[-1] < 0 or np.any(d[1:] > d[:-1])):
        return None
    slack, conj = eg_scan(d)
    graphic = bool(int(d.sum()) % 2 == 0 and slack.min() >= 0)
    return np.flatnonzero(slack == 0).astype(np.int64), conj, graphic


def m_index(d):
    n = len(d)
    i = 0
    while i < n and d[i] >= i:
        i += 1
    return i


def hu_scan(d, eg, conj, both):
    """Index into ``eg`` of the first slot (k, k') with k' >= k+2 violating the
    regularity conditions, or -1. ``both`` demands (i) and (ii) together."""
    for p in range(len(eg) - 1):
        k = int(eg[p])
        kk = int(eg[p + 1])
        if kk < k + 2:
            continue
        # (i): clique slot d[k..kk-1] (0-based) constant, in {d*_k', d*_k - delta_k - 2}
        ok_i = False
        if d[k] == d[kk - 1]:
            lo = max(k, int(conj[k + 1]))
            delta = max(0, int(conj[k]) - lo)
            v = int(d[k])
            ok_i = v == conj[kk] or v == conj[k] - delta - 2
        # (ii): terms strictly between k and k' occupy [conj[kk], conj[k+1])
        a0 = int(conj[kk])
        a1 = int(conj[k + 1])
        if a0 >= a1:
            ok_ii = True
        else:
            v = int(d[a0])
            ok_ii = d[a1 - 1] == v and (v == k + 1 or v == kk - 1)
        if both:
            if not (ok_i and ok_ii):
                return p
        elif not (ok_i or ok_ii):
            return p
    return -1
