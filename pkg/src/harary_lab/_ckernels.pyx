# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef unsigned long long u64


cdef int popcount(u64 x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void _rgs(const unsigned char* valid, int n, bint prune, int v, int nb,
               u64* blocks, long long* counts) nogil:
    cdef int b
    cdef u64 bit, nm
    if v == n:
        if not prune:
            for b in range(nb):
                if not valid[blocks[b]]:
                    return
        counts[nb] += 1
        return
    bit = (<u64>1) << v
    for b in range(nb):
        nm = blocks[b] | bit
        if prune and not valid[nm]:
            continue
        blocks[b] = nm
        _rgs(valid, n, prune, v + 1, nb, blocks, counts)
        blocks[b] = nm ^ bit
    if prune and not valid[bit]:
        return
    blocks[nb] = bit
    _rgs(valid, n, prune, v + 1, nb + 1, blocks, counts)
    blocks[nb] = 0


def partition_counts(const unsigned char[:] valid, int n, bint prune):
    cdef long long counts[64]
    cdef u64 blocks[64]
    cdef int i
    if n > 62:
        raise ValueError("too many vertices")
    for i in range(64):
        counts[i] = 0
        blocks[i] = 0
    if n == 0:
        return [1]
    with nogil:
        _rgs(&valid[0], n, prune, 0, 0, blocks, counts)
    return [counts[i] for i in range(n + 1)]


def coloring_count(const unsigned char[:] valid, int n, int k):
    cdef int colors[64]
    cdef u64 classes[64]
    cdef long long total = 0
    cdef int v, c, pos
    cdef bint ok
    if n == 0:
        return 1
    if k <= 0:
        return 0
    if k > 64 or n > 62:
        raise ValueError("arguments too large")
    for v in range(n):
        colors[v] = 0
    with nogil:
        while True:
            for c in range(k):
                classes[c] = 0
            for v in range(n):
                classes[colors[v]] |= (<u64>1) << v
            ok = True
            for c in range(k):
                if classes[c] and not valid[classes[c]]:
                    ok = False
                    break
            if ok:
                total += 1
            pos = 0
            while pos < n:
                colors[pos] += 1
                if colors[pos] < k:
                    break
                colors[pos] = 0
                pos += 1
            if pos == n:
                break
    return total


cdef int _merge(int* parent, const int* eu, const int* ev, u64 mask) nogil:
    cdef int merges = 0, i = 0, a, b
    while mask:
        if mask & 1:
            a = eu[i]
            b = ev[i]
            while parent[a] != a:
                a = parent[a]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[a] = b
                merges += 1
        mask >>= 1
        i += 1
    return merges


def xi_counts(int n, eu_list, ev_list):
    cdef int m = len(eu_list)
    cdef int eu[64]
    cdef int ev[64]
    cdef u64 ends[64]
    cdef int parent[64]
    cdef int p[64]
    cdef int i, rank_b, cov, nb, comps, dx, dy, dz
    cdef u64 B, A, vb, allowed
    cdef int sx = n + 1, sy = m + 1, sz = n + 1
    cdef long long* table
    if m > 62 or n > 62:
        raise ValueError("graph too large")
    for i in range(m):
        eu[i] = eu_list[i]
        ev[i] = ev_list[i]
        ends[i] = ((<u64>1) << eu[i]) | ((<u64>1) << ev[i])
    table = <long long*>calloc(sx * sy * sz, sizeof(long long))
    if table == NULL:
        raise MemoryError()
    try:
        with nogil:
            B = 0
            while B < ((<u64>1) << m):
                vb = 0
                allowed = 0
                for i in range(m):
                    if (B >> i) & 1:
                        vb |= ends[i]
                for i in range(m):
                    if not (ends[i] & vb):
                        allowed |= (<u64>1) << i
                for i in range(n):
                    parent[i] = i
                rank_b = _merge(parent, eu, ev, B)
                cov = popcount(vb) - rank_b
                nb = popcount(B)
                A = allowed
                while True:
                    for i in range(n):
                        p[i] = parent[i]
                    comps = n - rank_b - _merge(p, eu, ev, A)
                    dx = comps - cov
                    dy = popcount(A) + nb - cov
                    dz = cov
                    table[(dx * sy + dy) * sz + dz] += 1
                    if A == 0:
                        break
                    A = (A - 1) & allowed
                B += 1
        out = {}
        for dx in range(sx):
            for dy in range(sy):
                for dz in range(sz):
                    if table[(dx * sy + dy) * sz + dz]:
                        out[(dx, dy, dz)] = table[(dx * sy + dy) * sz + dz]
        return out
    finally:
        free(table)


def tutte_counts(int n, eu_list, ev_list):
    cdef int m = len(eu_list)
    cdef int eu[64]
    cdef int ev[64]
    cdef int parent[64]
    cdef int i, comps
    cdef u64 A
    cdef long long* table
    if m > 62 or n > 62:
        raise ValueError("graph too large")
    for i in range(m):
        eu[i] = eu_list[i]
        ev[i] = ev_list[i]
    table = <long long*>calloc((n + 1) * (m + 1), sizeof(long long))
    if table == NULL:
        raise MemoryError()
    try:
        with nogil:
            A = 0
            while A < ((<u64>1) << m):
                for i in range(n):
                    parent[i] = i
                comps = n - _merge(parent, eu, ev, A)
                table[comps * (m + 1) + popcount(A)] += 1
                A += 1
        out = {}
        for comps in range(n + 1):
            for i in range(m + 1):
                if table[comps * (m + 1) + i]:
                    out[(comps, i)] = table[comps * (m + 1) + i]
        return out
    finally:
        free(table)


cdef void _match(const int* eu, const int* ev, int m, int i, u64 used, int size,
                 long long* counts) nogil:
    if i == m:
        counts[size] += 1
        return
    _match(eu, ev, m, i + 1, used, size, counts)
    cdef int a = eu[i], b = ev[i]
    if a != b and not ((used >> a) & 1) and not ((used >> b) & 1):
        _match(eu, ev, m, i + 1, used | ((<u64>1) << a) | ((<u64>1) << b), size + 1, counts)


def matching_counts(int n, eu_list, ev_list):
    cdef int m = len(eu_list)
    cdef int eu[64]
    cdef int ev[64]
    cdef long long counts[64]
    cdef int i
    if m > 62 or n > 62:
        raise ValueError("graph too large")
    for i in range(m):
        eu[i] = eu_list[i]
        ev[i] = ev_list[i]
    for i in range(64):
        counts[i] = 0
    with nogil:
        _match(eu, ev, m, 0, 0, 0, counts)
    return [counts[i] for i in range(n // 2 + 1)]
