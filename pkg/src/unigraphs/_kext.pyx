# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; results match ``_kpure`` exactly (graphs with n <= 64)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t
from libc.string cimport memcpy

cnp.import_array()

NAME = "cython"
MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


# --------------------------------------------------------------------------
# canonical labelling
# --------------------------------------------------------------------------

cdef struct CanonState:
    int n
    uint64_t rows[64]
    uint64_t best[64]
    int best_order[64]
    int have_best


cdef inline int sig_cmp(uint8_t* a, uint8_t* b, int nc) noexcept nogil:
    cdef int c
    for c in range(nc):
        if a[c] != b[c]:
            return -1 if a[c] < b[c] else 1
    return 0


cdef int refine(CanonState* st, int* lab, int* cstart, int ncells) noexcept nogil:
    """Refine in place; ``cstart`` has ncells+1 entries. Returns new ncells."""
    cdef uint64_t masks[64]
    cdef uint8_t sig[64][64]
    cdef int newlab[64]
    cdef int newstart[65]
    cdef int order[64]
    cdef int c, i, j, s, e, v, nn, split, t, pos
    cdef uint64_t m
    while True:
        for c in range(ncells):
            m = 0
            for i in range(cstart[c], cstart[c + 1]):
                m |= (<uint64_t>1) << lab[i]
            masks[c] = m
        nn = 0
        split = 0
        pos = 0
        for c in range(ncells):
            s = cstart[c]
            e = cstart[c + 1]
            if e - s == 1:
                newstart[nn] = pos
                nn += 1
                newlab[pos] = lab[s]
                pos += 1
                continue
            for i in range(s, e):
                v = lab[i]
                for j in range(ncells):
                    sig[i][j] = <uint8_t>popcount(st.rows[v] & masks[j])
            # stable insertion sort of positions s..e-1 by signature
            for i in range(e - s):
                order[i] = s + i
            for i in range(1, e - s):
                t = order[i]
                j = i - 1
                while j >= 0 and sig_cmp(sig[order[j]], sig[t], ncells) > 0:
                    order[j + 1] = order[j]
                    j -= 1
                order[j + 1] = t
            newstart[nn] = pos
            nn += 1
            newlab[pos] = lab[order[0]]
            pos += 1
            for i in range(1, e - s):
                if sig_cmp(sig[order[i - 1]], sig[order[i]], ncells) != 0:
                    newstart[nn] = pos
                    nn += 1
                    split = 1
                newlab[pos] = lab[order[i]]
                pos += 1
        newstart[nn] = pos
        memcpy(lab, newlab, st.n * sizeof(int))
        memcpy(cstart, newstart, (nn + 1) * sizeof(int))
        ncells = nn
        if not split:
            return ncells


cdef void leaf(CanonState* st, int* lab) noexcept nogil:
    cdef int posn[64]
    cdef uint64_t cert[64]
    cdef int i, n = st.n, better = 0
    cdef uint64_t r, x
    for i in range(n):
        posn[lab[i]] = i
    for i in range(n):
        r = st.rows[lab[i]]
        x = 0
        while r:
            x |= (<uint64_t>1) << posn[__builtin_ctzll(r)]
            r &= r - 1
        cert[i] = x
    if not st.have_best:
        better = 1
    else:
        for i in range(n):
            if cert[i] != st.best[i]:
                better = cert[i] > st.best[i]
                break
    if better:
        st.have_best = 1
        memcpy(st.best, cert, n * sizeof(uint64_t))
        memcpy(st.best_order, lab, n * sizeof(int))


cdef void search(CanonState* st, int* lab, int* cstart, int ncells) noexcept nogil:
    cdef int idx = -1, c, i, j, s, e, v, u, ntried, skip, k
    cdef int cell[64]
    cdef int tried[64]
    cdef int lab2[64]
    cdef int cs2[65]
    cdef uint64_t bv
    for c in range(ncells):
        if cstart[c + 1] - cstart[c] > 1:
            idx = c
            break
    if idx < 0:
        leaf(st, lab)
        return
    s = cstart[idx]
    e = cstart[idx + 1]
    for i in range(s, e):
        cell[i - s] = lab[i]
    ntried = 0
    for i in range(e - s):
        v = cell[i]
        bv = (<uint64_t>1) << v
        skip = 0
        for j in range(ntried):
            u = tried[j]
            if (st.rows[u] & ~bv) == (st.rows[v] & ~((<uint64_t>1) << u)):
                skip = 1
                break
        if skip:
            continue
        tried[ntried] = v
        ntried += 1
        memcpy(lab2, lab, st.n * sizeof(int))
        lab2[s] = v
        k = s + 1
        for j in range(e - s):
            if cell[j] != v:
                lab2[k] = cell[j]
                k += 1
        for j in range(idx + 1):
            cs2[j] = cstart[j]
        cs2[idx + 1] = s + 1
        for j in range(idx + 1, ncells + 1):
            cs2[j + 1] = cstart[j]
        search(st, lab2, cs2, refine(st, lab2, cs2, ncells + 1))


def canon_order(int n, rows, colors=None):
    cdef CanonState st
    cdef int lab[64]
    cdef int cstart[65]
    cdef int i, ncells, pos
    if n == 0:
        return []
    if n > 64:
        raise ValueError("compiled kernel handles n <= 64")
    st.n = n
    st.have_best = 0
    for i in range(n):
        st.rows[i] = <uint64_t>rows[i]
    if colors is None:
        for i in range(n):
            lab[i] = i
        cstart[0] = 0
        cstart[1] = n
        ncells = 1
    else:
        pos = 0
        ncells = 0
        for col in sorted(set(colors)):
            cstart[ncells] = pos
            ncells += 1
            for i in range(n):
                if colors[i] == col:
                    lab[pos] = i
                    pos += 1
        cstart[ncells] = n
    with nogil:
        ncells = refine(&st, lab, cstart, ncells)
        search(&st, lab, cstart, ncells)
    return [st.best_order[i] for i in range(n)]


# --------------------------------------------------------------------------
# induced subgraph search
# --------------------------------------------------------------------------

cdef struct EmbedState:
    int hn
    int pn
    uint64_t hrows[64]
    uint64_t prows[64]
    int hdeg[64]
    int pdeg[64]
    int image[64]


cdef int extend(EmbedState* st, int i, uint64_t used) noexcept nogil:
    cdef uint64_t low = st.prows[i] & (((<uint64_t>1) << i) - 1)
    cdef uint64_t want = 0, mapped = 0
    cdef int j, x
    for j in range(i):
        mapped |= (<uint64_t>1) << st.image[j]
        if (low >> j) & 1:
            want |= (<uint64_t>1) << st.image[j]
    for x in range(st.hn):
        if (used >> x) & 1 or st.hdeg[x] < st.pdeg[i]:
            continue
        if (st.hrows[x] & mapped) != want:
            continue
        st.image[i] = x
        if i + 1 == st.pn or extend(st, i + 1, used | ((<uint64_t>1) << x)):
            return 1
    return 0


def find_induced(int hn, hrows, int pn, prows):
    cdef EmbedState st
    cdef int i, found
    if pn == 0:
        return ()
    if pn > hn:
        return None
    if hn > 64:
        raise ValueError("compiled kernel handles n <= 64")
    st.hn = hn
    st.pn = pn
    for i in range(hn):
        st.hrows[i] = <uint64_t>hrows[i]
        st.hdeg[i] = popcount(st.hrows[i])
    for i in range(pn):
        st.prows[i] = <uint64_t>prows[i]
        st.pdeg[i] = popcount(st.prows[i])
    with nogil:
        found = extend(&st, 0, 0)
    if found:
        return tuple(st.image[i] for i in range(pn))
    return None


# --------------------------------------------------------------------------
# degree-sequence scans
# --------------------------------------------------------------------------

def conjugate_counts(d):
    cdef const int64_t[::1] dv = np.ascontiguousarray(d, dtype=np.int64)
    cdef Py_ssize_t n = dv.shape[0], i
    cdef int64_t x
    out = np.zeros(n + 2, dtype=np.int64)
    cdef int64_t[::1] c = out
    for i in range(n):
        x = dv[i]
        if x > n + 1:
            x = n + 1
        c[x] += 1
    for i in range(n, -1, -1):
        c[i] += c[i + 1]
    return out


def eg_scan(d):
    cdef const int64_t[::1] dv = np.ascontiguousarray(d, dtype=np.int64)
    cdef Py_ssize_t n = dv.shape[0], k
    conj_arr = conjugate_counts(dv)
    cdef int64_t[::1] conj = conj_arr
    prefix_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] prefix = prefix_arr
    slack_arr = np.empty(n + 1, dtype=np.int64)
    cdef int64_t[::1] slack = slack_arr
    cdef int64_t total, ck, hi
    with nogil:
        for k in range(n):
            prefix[k + 1] = prefix[k] + dv[k]
        total = prefix[n]
        for k in range(n + 1):
            ck = conj[k]
            hi = ck if ck > k else k
            slack[k] = k * (k - 1) + (k * (ck - k) if ck > k else 0) + (total - prefix[hi]) - prefix[k]
    return slack_arr, conj_arr


def eg_points(d):
    """Fused scan for the recognizer: ``(eg, conj, graphic)``, or None when ``d``
    is not a nonincreasing sequence of nonnegative terms. Keeps a running
    suffix sum instead of a prefix array, so the sequence is read twice."""
    cdef const int64_t[::1] dv = np.ascontiguousarray(d, dtype=np.int64)
    cdef Py_ssize_t n = dv.shape[0], i, k, h, cnt = 0
    cdef int64_t x, prev, total = 0, pre = 0, suf = 0, ck, hi, s
    cdef bint ordered = True, graphic = True
    conj_arr = np.zeros(n + 2, dtype=np.int64)
    cdef int64_t[::1] c = conj_arr
    eg_arr = np.empty(n + 1, dtype=np.int64)
    cdef int64_t[::1] eg = eg_arr
    with nogil:
        prev = dv[0] if n > 0 else 0
        for i in range(n):
            x = dv[i]
            if x < 0 or x > prev:
                ordered = False
                break
            prev = x
            total += x
            c[x if x <= n + 1 else n + 1] += 1
        if ordered:
            for i in range(n, -1, -1):
                c[i] += c[i + 1]
            h = n
            for k in range(n + 1):
                ck = c[k]
                hi = ck if ck > k else k
                while h > hi:
                    h -= 1
                    suf += dv[h]
                while h < hi:
                    suf -= dv[h]
                    h += 1
                s = k * (k - 1) + (k * (ck - k) if ck > k else 0) + suf - pre
                if s == 0:
                    eg[cnt] = k
                    cnt += 1
                elif s < 0:
                    graphic = False
                if k < n:
                    pre += dv[k]
            graphic = graphic and total % 2 == 0
    if not ordered:
        return None
    return eg_arr[:cnt].copy(), conj_arr, graphic


def m_index(d):
    cdef const int64_t[::1] dv = np.ascontiguousarray(d, dtype=np.int64)
    cdef Py_ssize_t n = dv.shape[0], i = 0
    while i < n and dv[i] >= i:
        i += 1
    return i


def hu_scan(d, eg, conj, bint both):
    cdef const int64_t[::1] dv = np.ascontiguousarray(d, dtype=np.int64)
    cdef const int64_t[::1] ev = np.ascontiguousarray(eg, dtype=np.int64)
    cdef const int64_t[::1] cv = np.ascontiguousarray(conj, dtype=np.int64)
    cdef Py_ssize_t p, ne = ev.shape[0]
    cdef int64_t k, kk, lo, delta, v, a0, a1
    cdef bint ok_i, ok_ii
    cdef Py_ssize_t bad = -1
    with nogil:
        for p in range(ne - 1):
            k = ev[p]
            kk = ev[p + 1]
            if kk < k + 2:
                continue
            ok_i = False
            if dv[k] == dv[kk - 1]:
                lo = cv[k + 1] if cv[k + 1] > k else k
                delta = cv[k] - lo
                if delta < 0:
                    delta = 0
                v = dv[k]
                ok_i = v == cv[kk] or v == cv[k] - delta - 2
            a0 = cv[kk]
            a1 = cv[k + 1]
            if a0 >= a1:
                ok_ii = True
            else:
                v = dv[a0]
                ok_ii = dv[a1 - 1] == v and (v == k + 1 or v == kk - 1)
            if (both and not (ok_i and ok_ii)) or (not both and not (ok_i or ok_ii)):
                bad = p
                break
    return bad
