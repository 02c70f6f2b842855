# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled semistandard-filling kernels.

Same API and semantics as _fill_py; see that module for the contract.  The
inner loops run on C arrays; Python objects are only touched at leaves (and
at the last-box content lookup, which replaces an alphabet scan).
"""

import numpy as np

IMPL = "cython"

cdef struct Box:
    int left
    int up


cdef _neighbours(shape, int[:, ::1] out):
    cdef int i, j, flat = 0, acc = 0
    starts = []
    for r in shape:
        starts.append(acc)
        acc += r
    for i in range(len(starts)):
        for j in range(shape[i]):
            out[flat, 0] = starts[i] + j - 1 if j > 0 else -1
            out[flat, 1] = starts[i - 1] + j if i > 0 else -1
            flat += 1


def _rows(shape, entries):
    rows = []
    k = 0
    for r in shape:
        rows.append(tuple(entries[k : k + r]))
        k += r
    return tuple(rows)


def fill_all_count(shape, int K):
    return _fill_all(shape, K, None)


def fill_all_list(shape, int K):
    out = []
    _fill_all(shape, K, out)
    return out


def _fill_all(shape, int K, out):
    if not shape:
        if out is not None:
            out.append(())
        return 1
    if len(shape) > K:
        return 0
    cdef int n = sum(shape)
    nb_arr = np.empty((n, 2), dtype=np.int32)
    cdef int[:, ::1] nb = nb_arr
    _neighbours(shape, nb)
    ent_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] entries = ent_arr
    cand_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] cand = cand_arr
    cdef long long count = 0
    cdef int pos = 0, m, left, up
    cand[0] = 0
    while pos >= 0:
        if cand[pos] >= K:
            pos -= 1
            if pos >= 0:
                cand[pos] = entries[pos] + 1
            continue
        entries[pos] = cand[pos]
        if pos == n - 1:
            count += 1
            if out is not None:
                out.append(_rows(shape, [entries[p] for p in range(n)]))
            cand[pos] += 1
            continue
        pos += 1
        left = nb[pos, 0]
        up = nb[pos, 1]
        m = 0
        if left >= 0:
            m = entries[left]
        if up >= 0 and entries[up] + 1 > m:
            m = entries[up] + 1
        cand[pos] = m
    return count


def fill_weight_histogram(shape, int K, contents, int nletters):
    hist_bytes = {}
    if not shape:
        hist_bytes = {(0,) * nletters: 1}
        return hist_bytes
    if len(shape) > K:
        return {}
    cdef int n = sum(shape)
    cdef int L = nletters
    nb_arr = np.empty((n, 2), dtype=np.int32)
    cdef int[:, ::1] nb = nb_arr
    _neighbours(shape, nb)
    cont_arr = np.asarray(contents, dtype=np.int32).reshape(K, L)
    cdef int[:, ::1] cont = cont_arr
    ent_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] entries = ent_arr
    wt_arr = np.zeros(L, dtype=np.int32)
    cdef int[::1] weight = wt_arr
    _hist_rec(0, n, K, L, nb, cont, entries, weight, wt_arr, hist_bytes)
    return {
        tuple(int(x) for x in np.frombuffer(k, dtype=np.int32)): v
        for k, v in hist_bytes.items()
    }


cdef _hist_rec(int pos, int n, int K, int L, int[:, ::1] nb, int[:, ::1] cont,
               int[::1] entries, int[::1] weight, wt_arr, dict hist):
    cdef int lo = 0, e, p
    cdef int left = nb[pos, 0], up = nb[pos, 1]
    if left >= 0:
        lo = entries[left]
    if up >= 0 and entries[up] + 1 > lo:
        lo = entries[up] + 1
    cdef bint last = pos == n - 1
    for e in range(lo, K):
        for p in range(L):
            weight[p] += cont[e, p]
        if last:
            key = wt_arr.tobytes()
            if key in hist:
                hist[key] += 1
            else:
                hist[key] = 1
        else:
            entries[pos] = e
            _hist_rec(pos + 1, n, K, L, nb, cont, entries, weight, wt_arr, hist)
        for p in range(L):
            weight[p] -= cont[e, p]


def fill_weighted(shape, int K, contents, target, cap, int limit=0, bint collect=False):
    out = [] if collect else None
    cdef int L = len(target)
    if not shape:
        if any(target):
            return 0, out
        if collect:
            out.append(())
        return 1, out
    if len(shape) > K:
        return 0, out
    degree = sum(contents[0]) if K > 0 else 0
    cdef int n = sum(shape)
    if degree * n != sum(target):
        return 0, out

    nb_arr = np.empty((n, 2), dtype=np.int32)
    cdef int[:, ::1] nb = nb_arr
    _neighbours(shape, nb)
    cont_arr = np.asarray(contents, dtype=np.int32).reshape(K, L)
    cdef int[:, ::1] cont = cont_arr
    rem_arr = np.asarray(target, dtype=np.int32).copy()
    cdef int[::1] rem = rem_arr
    cap_arr = np.asarray(cap, dtype=np.int32)
    cdef int[::1] capv = cap_arr
    ent_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] entries = ent_arr

    groups = {}
    for r in range(K):
        groups.setdefault(tuple(contents[r]), []).append(r)

    cdef long long[1] count
    count[0] = 0
    _weighted_rec(0, n, K, L, nb, cont, rem, capv, entries, groups,
                  limit, out, shape, count)
    return count[0], out


cdef bint _weighted_rec(int pos, int n, int K, int L, int[:, ::1] nb,
                        int[:, ::1] cont, int[::1] rem, int[::1] capv,
                        int[::1] entries, dict groups, int limit, out,
                        shape, long long* count):
    """Returns True when the search should stop (limit reached)."""
    cdef int lo = 0, e, p, s, r, slots
    cdef int left = nb[pos, 0], up = nb[pos, 1]
    cdef bint ok
    if left >= 0:
        lo = entries[left]
    if up >= 0 and entries[up] + 1 > lo:
        lo = entries[up] + 1
    if pos == n - 1:
        key = tuple(rem[p] for p in range(L))
        ranks = groups.get(key)
        if ranks is None:
            return False
        for e in ranks:
            if e < lo:
                continue
            count[0] += 1
            if out is not None:
                entries[pos] = e
                out.append(_rows(shape, [entries[p] for p in range(n)]))
            if limit and count[0] >= limit:
                return True
        return False
    slots = n - pos - 1
    for e in range(lo, K):
        ok = True
        s = 0
        for p in range(L):
            r = rem[p] - cont[e, p]
            if r < 0:
                ok = False
                break
            s += r
            if s > slots * capv[p]:
                ok = False
                break
        if not ok:
            continue
        for p in range(L):
            rem[p] -= cont[e, p]
        entries[pos] = e
        if _weighted_rec(pos + 1, n, K, L, nb, cont, rem, capv, entries,
                         groups, limit, out, shape, count):
            for p in range(L):
                rem[p] += cont[e, p]
            return True
        for p in range(L):
            rem[p] += cont[e, p]
    return False
