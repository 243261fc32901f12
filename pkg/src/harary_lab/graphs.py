"""Multigraphs, edge eliminations, canonical forms and small-graph enumeration.

Vertices are ``0..n-1``. Edges are stored as an ordered tuple of pairs
``(u, v)`` with ``u <= v``; loops and repeated pairs are allowed. The edge
order is part of the value (edges are addressed by index) but nothing
computed downstream depends on it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import config

__all__ = [
    "MultiGraph",
    "parse_graph",
    "from_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "build_named",
    "parse_named",
    "edge_eliminations",
    "combine",
    "disjoint_union",
    "join",
    "component_counts",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "contains",
    "enumerate_nonisomorphic",
]


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets of the underlying simple graph (loops dropped)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in s) for s in self.adjacency)

    @cached_property
    def multiplicity(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix of edge multiplicities; the diagonal counts loops."""
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u][v] += 1
            if u != v:
                mat[v][u] += 1
        return tuple(tuple(r) for r in mat)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def simple_view(self) -> MultiGraph:
        """Drop loops, collapse parallel edges and sort the edge list."""
        if self.simple and list(self.edges) == sorted(self.edges):
            return self
        return MultiGraph(self.n, tuple(sorted({e for e in self.edges if e[0] != e[1]})))

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> MultiGraph:
        """Induced subgraph, vertices renumbered in increasing order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = tuple(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return MultiGraph(len(vs), edges)

    def induced_mask(self, mask: int) -> MultiGraph:
        return self.induced(v for v in range(self.n) if mask >> v & 1)

    def relabel(self, perm: Sequence[int]) -> MultiGraph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def delete_vertex(self, v: int) -> MultiGraph:
        return self.induced(w for w in range(self.n) if w != v)

    def delete_edge(self, e: int) -> MultiGraph:
        if not 0 <= e < self.m:
            raise IndexError(f"edge index {e} out of range")
        return MultiGraph(self.n, self.edges[:e] + self.edges[e + 1 :])

    def __str__(self) -> str:
        es = " ".join(f"{u}{'-'}{v}" for u, v in self.edges)
        return f"MultiGraph(n={self.n}, edges=[{es}])"


# ---------------------------------------------------------------- parsing


def _g6_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        raise ValueError("graph6 inputs with more than 62 vertices are not accepted")
    n = data[0] - 63
    if not 0 <= n <= 62:
        raise ValueError(f"malformed graph6 header byte {data[0]!r}")
    return n, 1


def from_graph6(text: str | bytes) -> MultiGraph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _g6_n(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for ch in body:
        if not 63 <= ch <= 126:
            raise ValueError(f"invalid graph6 byte {ch!r}")
        val = ch - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise ValueError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return MultiGraph(n, tuple(sorted(edges)))


def to_graph6(G: MultiGraph) -> str:
    if not G.simple:
        raise ValueError("graph6 encodes simple graphs only")
    if G.n > 62:
        raise ValueError("graph6 writer supports at most 62 vertices")
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> MultiGraph:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"malformed edge-list header {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise ValueError("negative count in edge-list header")
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return MultiGraph(n, tuple(edges))


def to_edge_list(G: MultiGraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def parse_graph(text: str) -> MultiGraph:
    """Decode either a graph6 string or the ``n m`` edge-list text format."""
    stripped = text.strip()
    first = stripped.splitlines()[0].split() if stripped else []
    if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
        return parse_edge_list(text)
    return from_graph6(stripped)


# ---------------------------------------------------------------- named families


def build_named(family: str, *params: int) -> MultiGraph:
    """Construct a member of a named family.

    Numbering: ``K_n``, ``E_n``: vertices 0..n-1. ``P_n``: path 0-1-...-(n-1).
    ``C_n``: cycle 0-1-...-(n-1)-0. ``K_{a,b}``: parts 0..a-1 and a..a+b-1.
    ``M_n``: edges (2i, 2i+1). ``K1uK2``: isolated 0 plus edge 1-2.
    ``K1j(K2uK1)``: centre 0 joined to the edge 1-2 and the vertex 3.
    """
    if any(p < 0 for p in params):
        raise ValueError(f"negative parameter for family {family}: {params}")
    if family == "K":
        (n,) = params
        return MultiGraph(n, tuple(itertools.combinations(range(n), 2)))
    if family == "E":
        (n,) = params
        return MultiGraph(n)
    if family == "P":
        (n,) = params
        return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))
    if family == "C":
        (n,) = params
        if n < 3:
            raise ValueError("C_n needs n >= 3")
        return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))
    if family == "Kab":
        a, b = params
        return MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))
    if family == "M":
        (n,) = params
        return MultiGraph(2 * n, tuple((2 * i, 2 * i + 1) for i in range(n)))
    if family == "K1uK2":
        return MultiGraph(3, ((1, 2),))
    if family == "K1j(K2uK1)":
        return MultiGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))
    raise ValueError(f"unknown family {family!r}")


_NAMED = re.compile(r"^(K|E|P|C|M)(\d+)$|^K(\d+),(\d+)$")


def parse_named(name: str) -> MultiGraph:
    """``K4``, ``E2``, ``P3``, ``C5``, ``M3``, ``K2,3``, ``K1uK2``, ``K1j(K2uK1)``."""
    s = name.strip()
    if s in ("K1uK2", "K1j(K2uK1)"):
        return build_named(s)
    match = _NAMED.match(s)
    if not match:
        raise ValueError(f"unknown named graph {name!r}")
    if match.group(1):
        return build_named(match.group(1), int(match.group(2)))
    return build_named("Kab", int(match.group(3)), int(match.group(4)))


# ---------------------------------------------------------------- operations


def _remove_vertices(G: MultiGraph, drop: set[int], edges: Iterable[tuple[int, int]]) -> MultiGraph:
    keep = [v for v in range(G.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    return MultiGraph(len(keep), tuple((index[u], index[v]) for u, v in edges))


def edge_eliminations(G: MultiGraph, e: int) -> tuple[MultiGraph, MultiGraph, MultiGraph]:
    """Return ``(G - e, G / e, G † e)``.

    Contraction merges the larger endpoint into the smaller one and keeps
    every loop and parallel edge it creates. A loop contracts to plain
    deletion; extracting a loop removes its single vertex.
    """
    if not 0 <= e < G.m:
        raise IndexError(f"edge index {e} out of range for {G.m} edges")
    u, v = G.edges[e]
    rest = G.edges[:e] + G.edges[e + 1 :]
    minus = MultiGraph(G.n, rest)
    if u == v:
        contract = minus
        extract = _remove_vertices(G, {u}, [f for f in rest if u not in f])
        return minus, contract, extract
    merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
    contract = _remove_vertices(G, {v}, merged)
    extract = _remove_vertices(
        G, {u, v}, [f for f in rest if u not in f and v not in f]
    )
    return minus, contract, extract


def disjoint_union(G: MultiGraph, H: MultiGraph) -> MultiGraph:
    shift = G.n
    return MultiGraph(G.n + H.n, G.edges + tuple((a + shift, b + shift) for a, b in H.edges))


def join(G: MultiGraph, H: MultiGraph) -> MultiGraph:
    if not (G.simple and H.simple):
        raise ValueError("join is defined here for simple graphs only")
    U = disjoint_union(G, H)
    cross = tuple((i, G.n + j) for i in range(G.n) for j in range(H.n))
    return MultiGraph(U.n, U.edges + cross)


def combine(G: MultiGraph, H: MultiGraph, op: str) -> MultiGraph:
    if op in ("union", "⊔", "disjoint_union"):
        return disjoint_union(G, H)
    if op in ("join", "⋈"):
        return join(G, H)
    raise ValueError(f"unknown graph operation {op!r}")


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def component_counts(G: MultiGraph, A: int, B: int) -> tuple[bool, int, int]:
    """``(V(A) ∩ V(B) = ∅, c(A ∪ B), cov(B))`` for edge bitmasks A and B."""
    va = vb = 0
    parent = list(range(G.n))
    comps = G.n
    for i, (u, v) in enumerate(G.edges):
        in_a, in_b = A >> i & 1, B >> i & 1
        if not (in_a or in_b):
            continue
        if in_a:
            va |= 1 << u | 1 << v
        if in_b:
            vb |= 1 << u | 1 << v
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    # cov(B): components of (V(B), B) alone
    parent = list(range(G.n))
    cov = bin(vb).count("1")
    for i, (u, v) in enumerate(G.edges):
        if B >> i & 1:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
                cov -= 1
    return (va & vb) == 0, comps, cov


# ---------------------------------------------------------------- canonical form


def _refine(mult: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Colour refinement; returned colours are ranks of sorted signatures."""
    n = len(colors)
    ncols = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = mult[v]
            nb = sorted((colors[w], row[w]) for w in range(n) if w != v and row[w])
            sigs.append((colors[v], row[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncols:
            return new
        colors, ncols = new, len(ranks)


def _twins(mult, u: int, v: int) -> bool:
    if mult[u][u] != mult[v][v]:
        return False
    ru, rv = mult[u], mult[v]
    return all(ru[w] == rv[w] for w in range(len(ru)) if w != u and w != v)


def _leaves(mult, colors: list[int]):
    n = len(colors)
    if len(set(colors)) == n:
        yield colors
        return
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    cell = [v for v in range(n) if colors[v] == target]
    reps: list[int] = []
    for v in cell:
        # a twin of an explored vertex is swapped with it by an automorphism
        # fixing the current colouring, so its subtree yields the same leaves
        if any(_twins(mult, r, v) for r in reps):
            continue
        reps.append(v)
        split = [2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)]
        yield from _leaves(mult, _refine(mult, split))


def _encode(mult, order: Sequence[int]) -> tuple[int, ...]:
    n = len(order)
    return tuple(mult[order[i]][order[j]] for i in range(n) for j in range(i, n))


@lru_cache(maxsize=200_000)
def _canonical(G: MultiGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    mult = G.multiplicity
    best = None
    best_perm = None
    for leaf in _leaves(mult, _refine(mult, [0] * G.n)):
        order = [0] * G.n
        for v, c in enumerate(leaf):
            order[c] = v
        code = _encode(mult, order)
        if best is None or code < best:
            best, best_perm = code, tuple(leaf)
    return best or (), best_perm or ()


def canonical_labeling(G: MultiGraph) -> tuple[int, ...]:
    """Permutation ``perm`` with ``G.relabel(perm)`` the canonical representative."""
    config.check("canonical", G.n, "vertex count")
    return _canonical(G)[1]


def canonical_graph(G: MultiGraph) -> MultiGraph:
    perm = canonical_labeling(G)
    return MultiGraph(G.n, tuple(sorted(G.relabel(perm).edges)))


def canonical_form(G: MultiGraph) -> bytes:
    """Isomorphism-complete key: equal bytes iff the graphs are isomorphic.

    Simple graphs map to the graph6 string of their canonical relabelling;
    multigraphs to the multiplicity encoding of it.
    """
    config.check("canonical", G.n, "vertex count")
    code, perm = _canonical(G)
    if G.simple:
        return to_graph6(G.relabel(perm)).encode("ascii")
    return b"M" + repr((G.n, code)).encode("ascii")


def is_isomorphic(G: MultiGraph, H: MultiGraph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    return canonical_form(G) == canonical_form(H)


# ---------------------------------------------------------------- containment


def _embeds(G: MultiGraph, H: MultiGraph, induced: bool) -> bool:
    if H.n > G.n or (H.m > G.m):
        return False
    if H.n == 0:
        return True
    # place H's vertices in BFS order so constraints bite early
    order: list[int] = []
    for comp in H.components():
        queue = [max(comp, key=lambda v: len(H.adjacency[v]))]
        seen = {queue[0]}
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(H.adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    gadj, hadj = G.adjacency, H.adjacency
    hdeg = [len(hadj[v]) for v in range(H.n)]
    image = [-1] * H.n
    used = [False] * G.n

    def extend(k: int) -> bool:
        if k == H.n:
            return True
        h = order[k]
        for g in range(G.n):
            if used[g] or len(gadj[g]) < hdeg[h]:
                continue
            ok = True
            for j in range(k):
                hp = order[j]
                adj_h = hp in hadj[h]
                adj_g = image[hp] in gadj[g]
                if (adj_h and not adj_g) or (induced and adj_g and not adj_h):
                    ok = False
                    break
            if ok:
                image[h] = g
                used[g] = True
                if extend(k + 1):
                    return True
                used[g] = False
        image[h] = -1
        return False

    return extend(0)


def _contract_simple(G: MultiGraph, e: tuple[int, int]) -> MultiGraph:
    u, v = e
    merged = set()
    for a, b in G.edges:
        a, b = (u if a == v else a), (u if b == v else b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return _remove_vertices(G, {v}, merged).simple_view()


def contains(G: MultiGraph, H: MultiGraph, mode: str = "subgraph") -> bool:
    """Brute-force test whether ``H`` is a subgraph, induced subgraph or minor of ``G``."""
    if not (G.simple and H.simple):
        raise ValueError("containment is defined for simple graphs")
    config.check("contains", G.n, "host order")
    if mode == "subgraph":
        return _embeds(G, H, induced=False)
    if mode == "induced":
        return _embeds(G, H, induced=True)
    if mode != "minor":
        raise ValueError(f"unknown containment mode {mode!r}")
    if H.n > G.n or H.m > G.m:
        return False
    seen: set[bytes] = set()
    frontier = [G]
    while frontier:
        nxt = []
        for X in frontier:
            if _embeds(X, H, induced=False):
                return True
            if X.n == H.n:
                continue
            kids = [X.delete_vertex(v) for v in range(X.n)]
            kids += [_contract_simple(X, e) for e in X.edges]
            for K in kids:
                if K.m < H.m:
                    continue
                key = canonical_form(K)
                if key not in seen:
                    seen.add(key)
                    nxt.append(K)
        frontier = nxt
    return False


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _by_order(n: int) -> tuple[MultiGraph, ...]:
    if n == 0:
        return (MultiGraph(0),)
    found: dict[bytes, MultiGraph] = {}
    for G in _by_order(n - 1):
        for S in range(1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if S >> v & 1)
            H = MultiGraph(n, G.edges + extra)
            key = canonical_form(H)
            if key not in found:
                found[key] = canonical_graph(H)
    return tuple(found[k] for k in sorted(found, key=lambda k: (found[k].m, k)))


def enumerate_nonisomorphic(n_max: int) -> list[MultiGraph]:
    """One simple representative per isomorphism class, orders 0..n_max.

    Graphs of order n are obtained by attaching a new vertex, in every
    possible way, to each representative of order n-1 and deduplicating by
    canonical form; every graph arises this way by deleting its last vertex.
    """
    if n_max < 0:
        return []
    config.check("enumerate", n_max, "n_max")
    out: list[MultiGraph] = []
    for n in range(n_max + 1):
        out.extend(_by_order(n))
    return out
