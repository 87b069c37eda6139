# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the deterministic finder modes.

Each kernel runs a whole algorithm and returns its tables plus an int64
counter array laid out as in the matching ``*_PHASES`` tuple of
``qgraph.paths``. ``mode`` is 0 (Classical, N per search) or 1
(IdealQuantum, ceil(sqrt(N)) per search). Candidate order and strict-less
tie-breaking match the numpy implementations exactly.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


cdef inline long long charge(long long n, int mode) noexcept nogil:
    cdef long long r
    if mode == 0:
        return n
    r = <long long>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while r * r < n:
        r += 1
    return r


def dijkstra_classic(const double[:, ::1] W, Py_ssize_t v0, int mode):
    cdef Py_ssize_t n = W.shape[0], v, w, it, m
    lam_a = np.empty(n)
    pred_a = np.full(n, v0, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    counts_a = np.zeros(3, dtype=np.int64)
    out_a = np.ones(n, dtype=np.uint8)
    cdef double[::1] lam = lam_a
    cdef long long[::1] pred = pred_a, order = order_a, counts = counts_a
    cdef unsigned char[::1] out = out_a
    cdef double c
    with nogil:
        for v in range(n):
            lam[v] = W[v0, v]
        lam[v0] = 0.0
        pred[v0] = -1
        out[v0] = 0
        order[0] = v0
        counts[0] = n - 1
        for it in range(1, n):
            w = -1
            m = 0
            for v in range(n):
                if out[v]:
                    m += 1
                    if w < 0 or lam[v] < lam[w]:
                        w = v
            counts[1] += charge(m, mode)
            out[w] = 0
            order[it] = w
            for v in range(n):
                if out[v]:
                    counts[2] += 1
                    c = lam[w] + W[w, v]
                    if c < lam[v]:
                        lam[v] = c
                        pred[v] = w
    return lam_a, pred_a, order_a, counts_a


def dijkstra_no_update(const double[:, ::1] W, Py_ssize_t v0, int mode):
    cdef Py_ssize_t n = W.shape[0], s, v, it, bs, bv
    lam_a = np.full(n, np.inf)
    pred_a = np.full(n, -1, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    counts_a = np.zeros(1, dtype=np.int64)
    ins_a = np.zeros(n, dtype=np.uint8)
    cdef double[::1] lam = lam_a
    cdef long long[::1] pred = pred_a, order = order_a, counts = counts_a
    cdef unsigned char[::1] ins = ins_a
    cdef double best, c
    with nogil:
        lam[v0] = 0.0
        ins[v0] = 1
        order[0] = v0
        for it in range(1, n):
            bs = -1
            bv = -1
            for s in range(n):
                if not ins[s]:
                    continue
                for v in range(n):
                    if ins[v]:
                        continue
                    c = lam[s] + W[s, v]
                    if bs < 0 or c < best:
                        best = c
                        bs = s
                        bv = v
            counts[0] += charge(<long long>it * (n - it), mode)
            lam[bv] = best
            pred[bv] = bs
            ins[bv] = 1
            order[it] = bv
    return lam_a, pred_a, order_a, counts_a


def dijkstra_periodic(const double[:, ::1] W, Py_ssize_t v0, Py_ssize_t k, int mode):
    cdef Py_ssize_t n = W.shape[0], v, w, a, it, m, tlen, bw, bv, bu, ba
    lam_a = np.empty(n)
    pred_a = np.full(n, v0, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    counts_a = np.zeros(4, dtype=np.int64)
    out_a = np.ones(n, dtype=np.uint8)
    T_a = np.empty(n + 1, dtype=np.int64)
    cdef double[::1] lam = lam_a
    cdef long long[::1] pred = pred_a, order = order_a, counts = counts_a, T = T_a
    cdef unsigned char[::1] out = out_a
    cdef double c, best, col
    with nogil:
        for v in range(n):
            lam[v] = W[v0, v]
        lam[v0] = 0.0
        pred[v0] = -1
        out[v0] = 0
        order[0] = v0
        counts[0] = n - 1
        T[0] = v0
        tlen = 1
        for it in range(1, n):
            # pair search over T x (V - S), T outer in insertion order
            bw = -1
            bv = -1
            for a in range(tlen):
                w = T[a]
                for v in range(n):
                    if out[v]:
                        c = lam[w] + W[w, v]
                        if bw < 0 or c < best:
                            best = c
                            bw = w
                            bv = v
            m = n - it
            counts[1] += charge(<long long>tlen * m, mode)
            # stale scan over V - S
            bu = -1
            for v in range(n):
                if out[v] and (bu < 0 or lam[v] < lam[bu]):
                    bu = v
            counts[2] += charge(m, mode)
            if best <= lam[bu]:
                lam[bv] = best
                pred[bv] = bw
                w = bv
            else:
                w = bu
            out[w] = 0
            order[it] = w
            T[tlen] = w
            tlen += 1
            if tlen >= k:
                for v in range(n):
                    if not out[v]:
                        continue
                    ba = 0
                    col = lam[T[0]] + W[T[0], v]
                    for a in range(1, tlen):
                        c = lam[T[a]] + W[T[a], v]
                        if c < col:
                            col = c
                            ba = a
                    counts[3] += charge(tlen, mode)
                    if col < lam[v]:
                        lam[v] = col
                        pred[v] = T[ba]
                tlen = 1
    return lam_a, pred_a, order_a, counts_a


def prim_classic(const double[:, ::1] W, Py_ssize_t v0, int mode):
    cdef Py_ssize_t n = W.shape[0], v, w, it, m
    L_a = np.empty(n)
    M_a = np.full(n, v0, dtype=np.int64)
    parent_a = np.full(n, -1, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    key_a = np.zeros(n)
    via_a = np.ones(n, dtype=bool)
    counts_a = np.zeros(3, dtype=np.int64)
    out_a = np.ones(n, dtype=np.uint8)
    cdef double[::1] L = L_a, key = key_a
    cdef long long[::1] M = M_a, parent = parent_a, order = order_a, counts = counts_a
    cdef unsigned char[::1] out = out_a
    with nogil:
        for v in range(n):
            L[v] = W[v0, v]
        L[v0] = 0.0
        M[v0] = -1
        out[v0] = 0
        order[0] = v0
        counts[0] = n - 1
        for it in range(1, n):
            w = -1
            m = 0
            for v in range(n):
                if out[v]:
                    m += 1
                    if w < 0 or L[v] < L[w]:
                        w = v
            counts[1] += charge(m, mode)
            out[w] = 0
            order[it] = w
            key[it] = L[w]
            parent[w] = M[w]
            for v in range(n):
                if out[v]:
                    counts[2] += 1
                    if W[w, v] < L[v]:
                        L[v] = W[w, v]
                        M[v] = w
    return order_a, parent_a, key_a, via_a, L_a, M_a, counts_a


def prim_no_update(const double[:, ::1] W, Py_ssize_t v0, int mode):
    cdef Py_ssize_t n = W.shape[0], s, v, it, bs, bv
    parent_a = np.full(n, -1, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    key_a = np.zeros(n)
    via_a = np.zeros(n, dtype=bool)
    counts_a = np.zeros(1, dtype=np.int64)
    ins_a = np.zeros(n, dtype=np.uint8)
    cdef double[::1] key = key_a
    cdef long long[::1] parent = parent_a, order = order_a, counts = counts_a
    cdef unsigned char[::1] ins = ins_a
    cdef double best
    with nogil:
        ins[v0] = 1
        order[0] = v0
        for it in range(1, n):
            bs = -1
            bv = -1
            for s in range(n):
                if not ins[s]:
                    continue
                for v in range(n):
                    if not ins[v] and (bs < 0 or W[s, v] < best):
                        best = W[s, v]
                        bs = s
                        bv = v
            counts[0] += charge(<long long>it * (n - it), mode)
            parent[bv] = bs
            ins[bv] = 1
            order[it] = bv
            key[it] = best
    return order_a, parent_a, key_a, via_a, counts_a


def prim_periodic(const double[:, ::1] W, Py_ssize_t v0, Py_ssize_t k, int mode):
    cdef Py_ssize_t n = W.shape[0], v, w, a, it, m, tlen, bw, bv, bu, ba
    L_a = np.empty(n)
    M_a = np.full(n, v0, dtype=np.int64)
    parent_a = np.full(n, -1, dtype=np.int64)
    order_a = np.empty(n, dtype=np.int64)
    key_a = np.zeros(n)
    via_a = np.ones(n, dtype=bool)
    counts_a = np.zeros(4, dtype=np.int64)
    out_a = np.ones(n, dtype=np.uint8)
    T_a = np.empty(n + 1, dtype=np.int64)
    cdef double[::1] L = L_a, key = key_a
    cdef long long[::1] M = M_a, parent = parent_a, order = order_a, counts = counts_a, T = T_a
    cdef unsigned char[::1] out = out_a
    cdef unsigned char[::1] via = via_a.view(np.uint8)
    cdef double best, col
    with nogil:
        for v in range(n):
            L[v] = W[v0, v]
        L[v0] = 0.0
        M[v0] = -1
        out[v0] = 0
        order[0] = v0
        counts[0] = n - 1
        T[0] = v0
        tlen = 1
        for it in range(1, n):
            bw = -1
            bv = -1
            for a in range(tlen):
                w = T[a]
                for v in range(n):
                    if out[v] and (bw < 0 or W[w, v] < best):
                        best = W[w, v]
                        bw = w
                        bv = v
            m = n - it
            counts[1] += charge(<long long>tlen * m, mode)
            bu = -1
            for v in range(n):
                if out[v] and (bu < 0 or L[v] < L[bu]):
                    bu = v
            counts[2] += charge(m, mode)
            if L[bu] <= best:
                w = bu
                parent[w] = M[w]
                key[it] = L[bu]
                via[it] = 1
            else:
                w = bv
                parent[w] = bw
                key[it] = best
                via[it] = 0
            out[w] = 0
            order[it] = w
            T[tlen] = w
            tlen += 1
            if tlen >= k:
                for v in range(n):
                    if not out[v]:
                        continue
                    ba = 0
                    col = W[T[0], v]
                    for a in range(1, tlen):
                        if W[T[a], v] < col:
                            col = W[T[a], v]
                            ba = a
                    counts[3] += charge(tlen, mode)
                    if col < L[v]:
                        L[v] = col
                        M[v] = T[ba]
                tlen = 1
    return order_a, parent_a, key_a, via_a, L_a, M_a, counts_a


def bipartite_partial(const double[:, ::1] A, const double[:, ::1] B, Py_ssize_t v0, int mode):
    """``A`` is n1 x n2 (V1 -> V2), ``B`` is n2 x n1 (V2 -> V1)."""
    cdef Py_ssize_t n1 = A.shape[0], n2 = A.shape[1]
    cdef Py_ssize_t u, v, w, j, it, bu, bj, bw
    lam1_a = np.full(n1, np.inf)
    lam2_a = np.empty(n2)
    pred1_a = np.full((n1, 2), -1, dtype=np.int64)
    pred2_a = np.empty(n2, dtype=np.int64)
    order_a = np.empty(n1, dtype=np.int64)
    counts_a = np.zeros(4, dtype=np.int64)
    ins_a = np.zeros(n1, dtype=np.uint8)
    cdef double[::1] lam1 = lam1_a, lam2 = lam2_a
    cdef long long[:, ::1] pred1 = pred1_a
    cdef long long[::1] pred2 = pred2_a, order = order_a, counts = counts_a
    cdef unsigned char[::1] ins = ins_a
    cdef double c, best, head
    with nogil:
        lam1[v0] = 0.0
        ins[v0] = 1
        order[0] = v0
        for v in range(n1):
            if ins[v]:
                continue
            bj = 0
            best = A[v0, 0] + B[0, v]
            for j in range(1, n2):
                c = A[v0, j] + B[j, v]
                if c < best:
                    best = c
                    bj = j
            counts[0] += charge(n2, mode)
            lam1[v] = best
            pred1[v, 0] = v0
            pred1[v, 1] = bj
        for it in range(1, n1):
            # triple search over S1 x V2 x (V1 - S1), row-major
            bu = -1
            for u in range(n1):
                if not ins[u]:
                    continue
                for j in range(n2):
                    head = lam1[u] + A[u, j]
                    for w in range(n1):
                        if ins[w]:
                            continue
                        c = head + B[j, w]
                        if bu < 0 or c < best:
                            best = c
                            bu = u
                            bj = j
                            bw = w
            counts[1] += charge(<long long>it * n2 * (n1 - it), mode)
            lam1[bw] = best
            pred1[bw, 0] = bu
            pred1[bw, 1] = bj
            ins[bw] = 1
            order[it] = bw
            w = bw
            for v in range(n1):
                if ins[v]:
                    continue
                bj = 0
                best = (lam1[w] + A[w, 0]) + B[0, v]
                for j in range(1, n2):
                    c = (lam1[w] + A[w, j]) + B[j, v]
                    if c < best:
                        best = c
                        bj = j
                counts[2] += charge(n2, mode)
                if best < lam1[v]:
                    lam1[v] = best
                    pred1[v, 0] = w
                    pred1[v, 1] = bj
        for j in range(n2):
            bu = 0
            best = lam1[0] + A[0, j]
            for u in range(1, n1):
                c = lam1[u] + A[u, j]
                if c < best:
                    best = c
                    bu = u
            counts[3] += charge(n1, mode)
            lam2[j] = best
            pred2[j] = bu
    return lam1_a, lam2_a, pred1_a, pred2_a, order_a, counts_a
