"""Classical graph polynomials, each computed independently of the Harary engine."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import config, kernels
from .graphs import MultiGraph, canonical_form, edge_eliminations
from .polyring import MPoly, X, Y

__all__ = [
    "chromatic_dc",
    "tutte_statesum",
    "MatchingResult",
    "matching_polys",
    "SubsetPredicate",
    "INDEPENDENT",
    "DOMINATING",
    "subset_generating_poly",
    "berkowitz",
    "spectrum_char_poly",
    "WitnessVerdict",
    "not_harary_witness",
]


# ---------------------------------------------------------------- chromatic


_chrom_memo: dict[bytes, MPoly] = {}


def _chromatic(G: MultiGraph) -> MPoly:
    if G.m == 0:
        return X ** G.n
    comps = G.components()
    if len(comps) > 1:
        out = MPoly.const(1)
        for comp in comps:
            out = out * _chromatic(G.induced(comp))
        return out
    key = canonical_form(G) if G.n <= config.bound("canonical") else None
    if key is not None and key in _chrom_memo:
        return _chrom_memo[key]
    minus, contract, _ = edge_eliminations(G, 0)
    result = _chromatic(minus.simple_view()) - _chromatic(contract.simple_view())
    if key is not None:
        _chrom_memo[key] = result
    return result


def chromatic_dc(G: MultiGraph) -> MPoly:
    """Chromatic polynomial by deletion-contraction.

    Loops force zero; parallel edges are collapsed before recursing.
    """
    config.check("chromatic", G.n, "vertex count")
    if any(u == v for u, v in G.edges):
        return MPoly()
    return _chromatic(G.simple_view())


# ---------------------------------------------------------------- Tutte


def _endpoints(G: MultiGraph) -> tuple[list[int], list[int]]:
    return [u for u, _ in G.edges], [v for _, v in G.edges]


def tutte_statesum(G: MultiGraph) -> MPoly:
    """``T(G;x,y) = sum_A (x-1)^(c(A)-c(E)) (y-1)^(|A|+c(A)-|V|)``."""
    config.check("tutte_edges", G.m, "edge count")
    eu, ev = _endpoints(G)
    counts = kernels.tutte_counts(G.n, eu, ev)
    c_all = len(G.components())
    xs, ys = X - 1, Y - 1
    out = MPoly()
    for (comps, size), cnt in counts.items():
        out = out + cnt * xs ** (comps - c_all) * ys ** (size + comps - G.n)
    return out


# ---------------------------------------------------------------- matchings


@dataclass(frozen=True)
class MatchingResult:
    counts: tuple[int, ...]
    generating: MPoly  # M(G;x) = sum m_i x^i
    defect: MPoly  # mu(G;x) = sum (-1)^i m_i x^(n-2i)


def matching_polys(G: MultiGraph) -> MatchingResult:
    config.check("matching_edges", G.m, "edge count")
    eu, ev = _endpoints(G)
    counts = kernels.matching_counts(G.n, eu, ev)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    M = MPoly({(i,): m for i, m in enumerate(counts)})
    mu = MPoly({(G.n - 2 * i,): (-1) ** i * m for i, m in enumerate(counts)})
    return MatchingResult(tuple(counts), M, mu)


# ---------------------------------------------------------------- subset generating functions


@dataclass(frozen=True)
class SubsetPredicate:
    name: str
    test: Callable[[MultiGraph, int], bool]


def _independent(G: MultiGraph, S: int) -> bool:
    adj = G.adjacency_masks
    T = S
    while T:
        low = T & -T
        v = low.bit_length() - 1
        if adj[v] & S:
            return False
        T ^= low
    return not any(u == v and S >> u & 1 for u, v in G.edges)


def _dominating(G: MultiGraph, S: int) -> bool:
    covered = S
    for v in range(G.n):
        if S >> v & 1:
            covered |= G.adjacency_masks[v]
    return covered == (1 << G.n) - 1


INDEPENDENT = SubsetPredicate("independent", _independent)
DOMINATING = SubsetPredicate("dominating", _dominating)


def subset_generating_poly(phi: SubsetPredicate, G: MultiGraph) -> MPoly:
    """``sum_{A ⊆ V, phi(A)} x^|A|``."""
    config.check("subset_order", G.n, "vertex count")
    counts = [0] * (G.n + 1)
    for S in range(1 << G.n):
        if phi.test(G, S):
            counts[bin(S).count("1")] += 1
    return MPoly.from_univariate(counts)


# ---------------------------------------------------------------- spectra


def berkowitz(A: list[list[int]]) -> list[int]:
    """Coefficients of ``det(xI - A)``, highest power first, without division.

    Builds the characteristic polynomial of each leading principal submatrix
    from the previous one through a lower-triangular Toeplitz product.
    """
    n = len(A)
    coeffs = [1]
    for r in range(n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        toe = [1, -A[r][r]]
        vec = col
        for _ in range(r):
            toe.append(-sum(a * b for a, b in zip(row, vec)))
            vec = [sum(A[i][j] * vec[j] for j in range(r)) for i in range(r)]
        coeffs = [
            sum(toe[i - j] * coeffs[j] for j in range(len(coeffs)) if 0 <= i - j < len(toe))
            for i in range(r + 2)
        ]
    return coeffs


def spectrum_char_poly(G: MultiGraph, which: str = "adjacency") -> MPoly:
    """Characteristic polynomial of the adjacency or Laplacian matrix."""
    if not G.simple:
        raise ValueError("spectral polynomials are computed for simple graphs")
    config.check("spectrum", G.n, "vertex count")
    A = [[1 if G.has_edge(i, j) else 0 for j in range(G.n)] for i in range(G.n)]
    if which == "laplacian":
        A = [[(sum(A[i]) if i == j else -A[i][j]) for j in range(G.n)] for i in range(G.n)]
    elif which != "adjacency":
        raise ValueError(f"unknown matrix {which!r}")
    high_first = berkowitz(A)
    return MPoly.from_univariate(reversed(high_first))


# ---------------------------------------------------------------- not-Harary witnesses


@dataclass(frozen=True)
class WitnessVerdict:
    value_at_1: Fraction
    is_obstruction: bool


def not_harary_witness(F: Callable[[MultiGraph], MPoly], G: MultiGraph) -> WitnessVerdict:
    """A Harary polynomial takes only the values 0 and 1 at ``x = 1``.

    A value outside ``{0, 1}`` certifies that ``F`` is not of that form.
    """
    value = F(G).eval(x=1)
    return WitnessVerdict(value, value not in (0, 1))
