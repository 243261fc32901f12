"""Harary polynomials from partition counts in the falling-factorial basis.

``b_i`` counts the partitions of V(G) into ``i`` blocks each inducing a
member of the property, and ``chi_P(G; x) = sum_i b_i x_(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import config, kernels
from .graphs import MultiGraph
from .polyring import MPoly, assemble_from_falling
from .properties import GraphProperty

__all__ = [
    "HararyResult",
    "block_validity",
    "partition_coefficients",
    "harary_polynomial",
    "count_colorings_direct",
    "p_chromatic_number",
]


@dataclass(frozen=True)
class HararyResult:
    property: str
    graph: MultiGraph
    coeffs: tuple[int, ...]
    poly: MPoly
    chromatic_number: int | None


def _require_simple(G: MultiGraph) -> MultiGraph:
    if not G.simple:
        raise ValueError("Harary polynomials are defined on simple graphs")
    return G.simple_view()


def block_validity(P: GraphProperty, G: MultiGraph) -> bytes:
    """``valid[S] = 1`` iff the vertex set ``S`` induces a member of ``P``."""
    n = G.n
    table = bytearray(1 << n)
    for S in range(1, 1 << n):
        table[S] = P.holds(G.induced_mask(S))
    return bytes(table)


def _down_closed(valid: bytes, n: int) -> bool:
    for S in range(1, 1 << n):
        if valid[S]:
            T = S
            while T:
                low = T & -T
                if S != low and not valid[S ^ low]:
                    return False
                T ^= low
    return True


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=20_000)
def _block_counts(P: GraphProperty, G: MultiGraph) -> tuple[int, ...]:
    """Partition counts indexed by block number (index 0 included)."""
    n = G.n
    if n == 0:
        return (1,)
    comps = G.components()
    if P.connected_only and len(comps) > 1:
        # blocks of a connected-only property sit inside one component
        out = [1]
        for comp in comps:
            out = _convolve(out, list(_block_counts(P, G.induced(comp))))
        return tuple(out)
    config.check("partition", n, "vertex count")
    valid = block_validity(P, G)
    # pruning a partial block is sound exactly when the table is closed under
    # taking nonempty subsets on this host graph
    prune = _down_closed(valid, n)
    return tuple(kernels.partition_counts(valid, n, prune))


def partition_coefficients(P: GraphProperty, G: MultiGraph) -> tuple[int, ...]:
    """``(b_1, ..., b_n)``; empty for the null graph."""
    S = _require_simple(G)
    return _block_counts(P, S)[1:]


def p_chromatic_number(P: GraphProperty, G: MultiGraph) -> int | None:
    """Least number of colours admitting a P-colouring, or None."""
    for i, b in enumerate(partition_coefficients(P, G), start=1):
        if b:
            return i
    return None


def harary_polynomial(P: GraphProperty, G: MultiGraph) -> HararyResult:
    coeffs = partition_coefficients(P, G)
    poly = assemble_from_falling(coeffs) if G.n else MPoly.const(1)
    chi = next((i for i, b in enumerate(coeffs, start=1) if b), None)
    return HararyResult(P.name, G, coeffs, poly, chi)


def count_colorings_direct(P: GraphProperty, G: MultiGraph, k: int) -> int:
    """Count maps V(G) -> [k] whose nonempty colour classes induce members of P.

    Brute force over all ``k^n`` maps; shares nothing with the partition
    enumeration beyond the property predicate.
    """
    if k < 0:
        raise ValueError("negative number of colours")
    S = _require_simple(G)
    config.check("colorings", k ** S.n, "k^n")
    if S.n and k == 0:
        return 0
    return kernels.coloring_count(block_validity(P, S), S.n, k)
