"""Pure-Python enumeration kernels.

Reference implementation and fallback for ``_ckernels``; both modules expose
the same functions with the same signatures and results.

``valid`` arguments are byte strings indexed by vertex bitmask: ``valid[S]``
is nonzero when the vertex set ``S`` induces a member of the property.
Edges are passed as two endpoint lists ``eu``, ``ev``.
"""

from __future__ import annotations

from itertools import product


def partition_counts(valid, n: int, prune: bool) -> list[int]:
    """Count set partitions of ``0..n-1`` into valid blocks, by block count.

    Restricted-growth enumeration: vertex ``v`` joins an existing block or
    opens the next one. With ``prune`` a block is dropped as soon as it is
    invalid, which is sound only when ``valid`` is closed under subsets.
    """
    counts = [0] * (n + 1)
    if n == 0:
        counts[0] = 1
        return counts
    blocks = [0] * n

    def rec(v: int, nb: int) -> None:
        if v == n:
            if not prune:
                for b in range(nb):
                    if not valid[blocks[b]]:
                        return
            counts[nb] += 1
            return
        bit = 1 << v
        for b in range(nb):
            nm = blocks[b] | bit
            if prune and not valid[nm]:
                continue
            blocks[b] = nm
            rec(v + 1, nb)
            blocks[b] = nm ^ bit
        if prune and not valid[bit]:
            return
        blocks[nb] = bit
        rec(v + 1, nb + 1)
        blocks[nb] = 0

    rec(0, 0)
    return counts


def coloring_count(valid, n: int, k: int) -> int:
    """Number of maps ``V -> [k]`` whose nonempty colour classes are all valid."""
    if n == 0:
        return 1
    total = 0
    for colors in product(range(k), repeat=n):
        classes = [0] * k
        for v, c in enumerate(colors):
            classes[c] |= 1 << v
        if all(valid[S] for S in classes if S):
            total += 1
    return total


def _merge_count(parent: list[int], eu, ev, mask: int) -> int:
    """Union edges in ``mask`` into ``parent``; return how many merges happened."""
    merges = 0
    i = 0
    while mask:
        if mask & 1:
            a, b = eu[i], ev[i]
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


def xi_counts(n: int, eu, ev) -> dict[tuple[int, int, int], int]:
    """Coefficients of the xi state sum, keyed by ``(x, y, z)`` exponents.

    Sums over ordered pairs ``(A, B)`` of edge sets with disjoint covered
    vertex sets the monomial ``x^(c(A∪B)-cov B) y^(|A|+|B|-cov B) z^(cov B)``.
    """
    m = len(eu)
    ends = [(1 << eu[i]) | (1 << ev[i]) for i in range(m)]
    out: dict[tuple[int, int, int], int] = {}
    for B in range(1 << m):
        vb = 0
        for i in range(m):
            if B >> i & 1:
                vb |= ends[i]
        parent = list(range(n))
        rank_b = _merge_count(parent, eu, ev, B)
        cov = bin(vb).count("1") - rank_b
        nb = bin(B).count("1")
        allowed = 0
        for i in range(m):
            if not ends[i] & vb:
                allowed |= 1 << i
        A = allowed
        while True:
            p = list(parent)
            comps = n - rank_b - _merge_count(p, eu, ev, A)
            key = (comps - cov, bin(A).count("1") + nb - cov, cov)
            out[key] = out.get(key, 0) + 1
            if A == 0:
                break
            A = (A - 1) & allowed
    return out


def tutte_counts(n: int, eu, ev) -> dict[tuple[int, int], int]:
    """Number of edge subsets by ``(components of (V, A), |A|)``."""
    m = len(eu)
    out: dict[tuple[int, int], int] = {}
    for A in range(1 << m):
        comps = n - _merge_count(list(range(n)), eu, ev, A)
        key = (comps, bin(A).count("1"))
        out[key] = out.get(key, 0) + 1
    return out


def matching_counts(n: int, eu, ev) -> list[int]:
    """``m_i`` = number of matchings with ``i`` edges (loops never match)."""
    m = len(eu)
    counts = [0] * (n // 2 + 1)

    def rec(i: int, used: int, size: int) -> None:
        if i == m:
            counts[size] += 1
            return
        rec(i + 1, used, size)
        a, b = eu[i], ev[i]
        if a != b and not (used >> a & 1) and not (used >> b & 1):
            rec(i + 1, used | 1 << a | 1 << b, size + 1)

    rec(0, 0, 0)
    return counts
