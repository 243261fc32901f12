"""The universal edge-elimination invariant xi(G; x, y, z).

Two independent routes: the state sum over vertex-disjoint pairs of edge
sets, and the recursion

    F(G) = F(G - e) + y F(G / e) + z F(G † e),  F(null) = 1,  F(K1) = x,

multiplicative over components. Also the Tutte and matching polynomials as
substitution instances, and the generic chromatic (Tutte-Grothendieck)
invariant with its Tutte-polynomial characterization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import config, kernels
from .classic import tutte_statesum
from .graphs import MultiGraph, canonical_form, canonical_graph, edge_eliminations
from .polyring import MPoly, X, Y, Z, var

__all__ = [
    "xi_statesum",
    "xi_recursive",
    "xi_polynomial",
    "substitute_instance",
    "ChromInvParams",
    "chromatic_invariant",
    "characterization_rhs",
    "check_characterization",
    "ee_consistent",
]


def xi_statesum(G: MultiGraph) -> MPoly:
    config.check("xi_edges", G.m, "edge count")
    eu = [u for u, _ in G.edges]
    ev = [v for _, v in G.edges]
    return MPoly(kernels.xi_counts(G.n, eu, ev))


_xi_memo: dict[bytes, MPoly] = {}


def _xi_connected(G: MultiGraph) -> MPoly:
    if G.m == 0:
        return X  # K1
    key = canonical_form(G)
    hit = _xi_memo.get(key)
    if hit is not None:
        return hit
    # eliminate the first edge of the canonical representative so the
    # result cannot depend on the caller's labelling
    C = canonical_graph(G)
    minus, contract, extract = edge_eliminations(C, 0)
    result = _xi(minus) + Y * _xi(contract) + Z * _xi(extract)
    _xi_memo[key] = result
    return result


def _xi(G: MultiGraph) -> MPoly:
    out = MPoly.const(1)
    for comp in G.components():
        out = out * _xi_connected(G.induced(comp))
    return out


def xi_recursive(G: MultiGraph) -> MPoly:
    config.check("xi_order", G.n, "vertex count")
    return _xi(G)


def xi_polynomial(G: MultiGraph, method: str = "auto") -> MPoly:
    """xi by the state sum when the edge count allows it, else by recursion."""
    if method == "statesum" or (method == "auto" and G.m <= 12):
        return xi_statesum(G)
    if method in ("recursive", "auto"):
        return xi_recursive(G)
    raise ValueError(f"unknown method {method!r}")


def substitute_instance(G: MultiGraph, which: str, method: str = "auto") -> MPoly:
    """Tutte or matching polynomial obtained by substituting into xi.

    ``tutte``: xi(G; (x-1)(y-1), y-1, 0) / ((x-1)^c(E) (y-1)^|V|), the
    division being exact. ``matching_bivariate``: xi(G; w1, 0, w2) with
    ``w1, w2`` in the ``x, y`` slots. ``matching_defect``: xi(G; x, 0, -1).
    """
    xi = xi_polynomial(G, method)
    if which == "tutte":
        sub = xi.subs({"x": (X - 1) * (Y - 1), "y": Y - 1, "z": 0})
        c_all = len(G.components())
        return sub.exact_div((X - 1) ** c_all * (Y - 1) ** G.n)
    if which == "matching_bivariate":
        return xi.subs({"x": X, "y": 0, "z": Y})
    if which == "matching_defect":
        return xi.subs({"y": 0, "z": -1})
    raise ValueError(f"unknown substitution instance {which!r}")


# ---------------------------------------------------------------- chromatic invariants


@dataclass(frozen=True)
class ChromInvParams:
    bridge: MPoly  # A
    loop: MPoly  # B
    alpha: MPoly
    beta: MPoly

    @classmethod
    def symbolic(cls) -> ChromInvParams:
        """A, B, alpha, beta as the independent variables x, y, z, w."""
        return cls(var("x"), var("y"), var("z"), var("w"))


def _is_bridge(G: MultiGraph, e: int) -> bool:
    u, v = G.edges[e]
    if u == v:
        return False
    minus = G.delete_edge(e)
    return len(minus.components()) > len(G.components())


def chromatic_invariant(G: MultiGraph, p: ChromInvParams) -> MPoly:
    """Evaluate the invariant by its defining rules.

    No edges gives 1; a loop contributes ``B f(G-e)``; a bridge ``A f(G-e)``;
    any other edge ``alpha f(G-e) + beta f(G/e)``.
    """
    config.check("xi_order", G.n, "vertex count")
    memo: dict[bytes, MPoly] = {}

    def f(H: MultiGraph) -> MPoly:
        if H.m == 0:
            return MPoly.const(1)
        key = canonical_form(H)
        if key in memo:
            return memo[key]
        C = canonical_graph(H)
        minus, contract, _ = edge_eliminations(C, 0)
        u, v = C.edges[0]
        if u == v:
            out = p.loop * f(minus)
        elif _is_bridge(C, 0):
            out = p.bridge * f(minus)
        else:
            out = p.alpha * f(minus) + p.beta * f(contract)
        memo[key] = out
        return out

    return f(G)


def characterization_rhs(G: MultiGraph, p: ChromInvParams) -> MPoly:
    """``alpha^nullity beta^rank T(G; A/beta, B/alpha)`` with denominators cleared.

    A Tutte term ``x^i y^j`` has ``i <= rank`` and ``j <= nullity``, so it
    becomes ``A^i B^j beta^(rank-i) alpha^(nullity-j)``.
    """
    k = len(G.components())
    rank = G.n - k
    nullity = G.m - G.n + k
    T = tutte_statesum(G)
    out = MPoly()
    for exp, c in T.terms.items():
        i = exp[0] if len(exp) > 0 else 0
        j = exp[1] if len(exp) > 1 else 0
        out = out + c * p.bridge**i * p.loop**j * p.beta ** (rank - i) * p.alpha ** (nullity - j)
    return out


def check_characterization(G: MultiGraph, p: ChromInvParams | None = None) -> tuple[MPoly, MPoly, bool]:
    p = p or ChromInvParams.symbolic()
    lhs = chromatic_invariant(G, p)
    rhs = characterization_rhs(G, p)
    return lhs, rhs, lhs == rhs


# ---------------------------------------------------------------- edge-elimination consistency


def ee_consistent(
    F: Callable[[MultiGraph], MPoly], graphs: Iterable[MultiGraph]
) -> tuple[bool, int, int]:
    """Can constants alpha, beta satisfy every elimination identity?

    Collects ``F(G) - F(G-e) = alpha F(G/e) + beta F(G†e)`` over all edges
    of the given simple graphs (eliminations taken in the simple view) and
    compares the rank of the coefficient matrix with that of the augmented
    matrix over the rational-function field. Returns ``(consistent, rank,
    augmented_rank)``; inconsistency rules out every alpha, beta.
    """
    from .hankel import rank_exact

    rows: list[list[MPoly]] = []
    for G in graphs:
        fG = F(G)
        for e in range(G.m):
            minus, contract, extract = edge_eliminations(G, e)
            rows.append([F(contract.simple_view()), F(extract.simple_view()), fG - F(minus)])
    coeff = [r[:2] for r in rows]
    r1, r2 = rank_exact(coeff), rank_exact(rows)
    return r1 == r2, r1, r2
