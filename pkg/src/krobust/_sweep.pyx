# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled removal-set sweep; mirrors ``_sweep_py`` for n <= 64 and m <= 64."""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

DOMINATION = 0
MATCHING = 1

cdef extern from *:
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef inline uint64_t _bit(int i) nogil:
    return (<uint64_t>1) << i

cdef bint _connected(int n, const uint64_t* adj) nogil:
    cdef uint64_t seen, frontier, nxt, f, full
    if n <= 1:
        return True
    full = (_bit(n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz64(f)]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full

cdef void _reduce(int n, const uint64_t* adj, const int* eu, const int* ev,
                  uint64_t removed, uint64_t* out) nogil:
    cdef int v, i
    for v in range(n):
        out[v] = adj[v]
    while removed:
        i = ctz64(removed)
        out[eu[i]] &= ~_bit(ev[i])
        out[ev[i]] &= ~_bit(eu[i])
        removed &= removed - 1

cdef int _violation(int n, int m, const uint64_t* radj, const int* eu, const int* ev,
                    int kind, uint64_t payload, uint64_t removed) nogil:
    cdef int w, i
    cdef uint64_t matched, live
    if kind == 0:
        for w in range(n):
            if not ((payload >> w) & 1) and not (radj[w] & payload):
                return w
        return -1
    matched = 0
    live = payload & ~removed
    while live:
        i = ctz64(live)
        matched |= _bit(eu[i]) | _bit(ev[i])
        live &= live - 1
    for i in range(m):
        if (removed >> i) & 1:
            continue
        if not ((matched >> eu[i]) & 1) and not ((matched >> ev[i]) & 1):
            return i
    return -1


def connected(int n, adj):
    cdef uint64_t buf[64]
    cdef int v
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for v in range(n):
        buf[v] = adj[v]
    return _connected(n, buf)


def removal_sweep(int n, adj, eu, ev, int kind, payload, k, bint filtered):
    cdef uint64_t a[64]
    cdef uint64_t radj[64]
    cdef int u_[64]
    cdef int v_[64]
    cdef int m = len(eu)
    cdef int v, i, size, w, budget
    cdef size_t j
    cdef uint64_t pay, cand
    cdef vector[uint64_t] fmask, nmask
    cdef vector[int] flast, nlast
    if n > 64 or m > 64:
        raise ValueError("compiled kernel supports at most 64 vertices and 64 edges")
    for v in range(n):
        a[v] = adj[v]
    for i in range(m):
        u_[i] = eu[i]
        v_[i] = ev[i]
    pay = payload
    budget = min(k, m)

    w = _violation(n, m, a, u_, v_, kind, pay, 0)
    if w >= 0:
        return 0, w
    fmask.push_back(0)
    flast.push_back(-1)
    with nogil:
        for size in range(1, budget + 1):
            nmask.clear()
            nlast.clear()
            for j in range(fmask.size()):
                for i in range(flast[j] + 1, m):
                    cand = fmask[j] | _bit(i)
                    _reduce(n, a, u_, v_, cand, radj)
                    if filtered and not _connected(n, radj):
                        continue
                    w = _violation(n, m, radj, u_, v_, kind, pay, cand)
                    if w >= 0:
                        break
                    if size < budget:
                        nmask.push_back(cand)
                        nlast.push_back(i)
                if w >= 0:
                    break
            if w >= 0 or nmask.size() == 0:
                break
            fmask.swap(nmask)
            flast.swap(nlast)
    if w >= 0:
        return cand, w
    return None
