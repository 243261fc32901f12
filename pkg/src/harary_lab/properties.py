"""Graph properties that parameterize Harary polynomials.

Every builtin excludes the null graph, so partitions only use nonempty
blocks. Closure classification is bounded: a ``True`` flag means no
counterexample among graphs up to the requested order, nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import config
from .graphs import (
    MultiGraph,
    _contract_simple,
    _embeds,
    canonical_form,
    disjoint_union,
    enumerate_nonisomorphic,
    from_graph6,
    is_isomorphic,
    parse_named,
)

__all__ = [
    "GraphProperty",
    "builtin",
    "parse_property",
    "standard_catalog",
    "classify",
    "ClassifyReport",
    "minimal_forbidden",
]


@dataclass(eq=False)
class GraphProperty:
    """A decidable predicate on simple graphs.

    ``claims`` lists closure properties the definition guarantees (checked
    by the test-suite, never trusted by the algorithms). ``connected_only``
    marks properties whose members are all connected, which lets partition
    counts factor over the components of the host graph.
    """

    name: str
    predicate: Callable[[MultiGraph], bool]
    claims: frozenset[str] = frozenset()
    connected_only: bool = False
    _memo: dict = field(default_factory=dict, repr=False)

    def holds(self, G: MultiGraph) -> bool:
        S = G.simple_view()
        if S.n == 0:
            return False
        hit = self._memo.get(S)
        if hit is None:
            hit = bool(self.predicate(S))
            self._memo[S] = hit
        return hit

    def __repr__(self) -> str:
        return f"GraphProperty({self.name})"


def _graph_arg(spec: str | MultiGraph) -> MultiGraph:
    if isinstance(spec, MultiGraph):
        return spec
    try:
        return parse_named(spec)
    except ValueError:
        return from_graph6(spec)


def _label(H: MultiGraph) -> str:
    from .graphs import to_graph6

    return to_graph6(H.simple_view())


def builtin(name: str, param=None) -> GraphProperty:
    """Builtin property by name; ``param`` is ``t`` for MCC or a graph ``H``."""
    key = name.lower().replace("_", "").replace("-", "")
    if key == "edgeless":
        return GraphProperty(
            "edgeless", lambda G: G.m == 0, frozenset({"hereditary", "monotone", "additive", "minor_closed"})
        )
    if key == "complete":
        return GraphProperty(
            "complete", lambda G: G.m == G.n * (G.n - 1) // 2, frozenset({"hereditary"}), connected_only=True
        )
    if key == "connected":
        return GraphProperty("connected", lambda G: G.is_connected(), frozenset(), connected_only=True)
    if key == "mcc":
        t = int(param)
        if t < 1:
            raise ValueError("MCC(t) needs t >= 1")
        return GraphProperty(
            f"mcc:{t}",
            lambda G: all(len(c) <= t for c in G.components()),
            frozenset({"hereditary", "monotone", "additive", "minor_closed"}),
        )
    if key in ("inducedfree", "subgraphfree"):
        H = _graph_arg(param).simple_view()
        if H.n == 0:
            raise ValueError("forbidden graph must be nonempty")
        induced = key == "inducedfree"
        claims = {"hereditary"} if induced else {"hereditary", "monotone"}
        if induced and H.m == H.n * (H.n - 1) // 2:
            claims.add("monotone")
        if H.is_connected():
            claims.add("additive")
        tag = "induced-free" if induced else "subgraph-free"
        return GraphProperty(
            f"{tag}:{_label(H)}", lambda G: not _embeds(G, H, induced=induced), frozenset(claims)
        )
    if key in ("disjointunionof", "du"):
        H = _graph_arg(param).simple_view()
        if not H.is_connected():
            raise ValueError("DisjointUnionOf(H) needs a connected H")

        def du(G: MultiGraph) -> bool:
            for comp in G.components():
                C = G.induced(comp)
                if C.n != H.n or C.m != H.m or not is_isomorphic(C, H):
                    return False
            return True

        return GraphProperty(f"du:{_label(H)}", du, frozenset({"additive"}))
    raise ValueError(f"unknown property {name!r}")


def parse_property(spec: str) -> GraphProperty:
    """Parse CLI property strings such as ``mcc:2`` or ``induced-free:P3``."""
    head, _, arg = spec.strip().partition(":")
    head = head.lower()
    if head in ("edgeless", "complete", "connected"):
        if arg:
            raise ValueError(f"property {head} takes no argument")
        return builtin(head)
    if head == "adjoint":
        return builtin("complete")
    if head == "convex":
        return builtin("connected")
    if head == "mcc":
        return builtin("mcc", int(arg))
    if head in ("induced-free", "inducedfree", "fr"):
        return builtin("induced-free", arg)
    if head in ("subgraph-free", "subgraphfree"):
        return builtin("subgraph-free", arg)
    if head in ("du", "disjoint-union"):
        return builtin("du", arg)
    raise ValueError(f"unknown property spec {spec!r}")


def standard_catalog() -> list[GraphProperty]:
    """The fixed list of builtin instances swept by the verification suites."""
    return [
        builtin("edgeless"),
        builtin("complete"),
        builtin("connected"),
        builtin("mcc", 2),
        builtin("mcc", 3),
        builtin("induced-free", "P3"),
        builtin("induced-free", "K3"),
        builtin("induced-free", "K1uK2"),
        builtin("subgraph-free", "P3"),
        builtin("subgraph-free", "K3"),
        builtin("du", "K1"),
        builtin("du", "K2"),
        builtin("du", "P3"),
    ]


# ---------------------------------------------------------------- classification


@dataclass
class ClassifyReport:
    property: str
    n_max: int
    flags: dict[str, bool]
    counterexamples: dict[str, tuple[MultiGraph, str, MultiGraph] | None]

    def as_dict(self) -> dict:
        from .graphs import to_graph6

        out = {"property": self.property, "n_max": self.n_max, "flags": dict(self.flags), "counterexamples": {}}
        for k, ce in self.counterexamples.items():
            if ce is None:
                out["counterexamples"][k] = None
            else:
                G, op, H = ce
                out["counterexamples"][k] = {
                    "graph": to_graph6(G),
                    "operation": op,
                    "result": to_graph6(H) if H.n else "",
                }
        return out


def _vertex_deletions(G: MultiGraph):
    if G.n >= 2:
        for v in range(G.n):
            yield f"delete vertex {v}", G.delete_vertex(v)


def _edge_deletions(G: MultiGraph):
    for i, e in enumerate(G.edges):
        yield f"delete edge {e[0]}-{e[1]}", G.delete_edge(i)


def _contractions(G: MultiGraph):
    for e in G.edges:
        yield f"contract edge {e[0]}-{e[1]}", _contract_simple(G, e)


_STEPS = {
    "hereditary": (_vertex_deletions,),
    "monotone": (_vertex_deletions, _edge_deletions),
    "minor_closed": (_vertex_deletions, _edge_deletions, _contractions),
}


def classify(P: GraphProperty, n_max: int) -> ClassifyReport:
    """Search for closure counterexamples among all graphs of order <= n_max.

    Closure under single deletions/contractions on the enumerated range
    implies closure under their compositions on that range, so one-step
    checks suffice. Additivity is tested for pairs of combined order <= n_max.
    The null graph is never used as a witness.
    """
    config.check("classify", n_max, "n_max")
    members = [G for G in enumerate_nonisomorphic(n_max) if G.n >= 1 and P.holds(G)]
    flags: dict[str, bool] = {}
    ces: dict[str, tuple | None] = {}
    for flag, steps in _STEPS.items():
        found = None
        for G in members:
            for step in steps:
                for op, H in step(G):
                    if not P.holds(H):
                        found = (G, op, H)
                        break
                if found:
                    break
            if found:
                break
        flags[flag], ces[flag] = found is None, found
    found = None
    for i, G in enumerate(members):
        for H in members[i:]:
            if G.n + H.n > n_max:
                continue
            U = disjoint_union(G, H)
            if not P.holds(U):
                found = (G, f"disjoint union with {_label(H)}", U)
                break
        if found:
            break
    flags["additive"], ces["additive"] = found is None, found
    order = ["hereditary", "monotone", "additive", "minor_closed"]
    return ClassifyReport(P.name, n_max, {k: flags[k] for k in order}, {k: ces[k] for k in order})


# ---------------------------------------------------------------- minimal forbidden graphs


_MODE_STEPS = {
    "induced": (_vertex_deletions,),
    "subgraph": (_vertex_deletions, _edge_deletions),
    "minor": (_vertex_deletions, _edge_deletions, _contractions),
}


@lru_cache(maxsize=None)
def _downset(key: bytes, mode: str) -> frozenset[bytes]:
    G = _REPS[key]
    out: set[bytes] = set()
    for step in _MODE_STEPS[mode]:
        for _, H in step(G):
            k = canonical_form(H)
            _REPS.setdefault(k, H)
            if k not in out:
                out.add(k)
                out |= _downset(k, mode)
    return frozenset(out)


_REPS: dict[bytes, MultiGraph] = {}


def minimal_forbidden(P: GraphProperty, mode: str, n_max: int) -> list[MultiGraph]:
    """Graphs outside ``P`` all of whose proper (mode-)substructures lie in ``P``.

    Sorted by (order, size). Only nonempty substructures are considered.
    """
    if mode not in _MODE_STEPS:
        raise ValueError(f"unknown mode {mode!r}")
    config.check("classify", n_max, "n_max")
    out = []
    for G in enumerate_nonisomorphic(n_max):
        if G.n == 0 or P.holds(G):
            continue
        key = canonical_form(G)
        _REPS.setdefault(key, G)
        if all(P.holds(_REPS[k]) for k in _downset(key, mode) if _REPS[k].n > 0):
            out.append(G)
    out.sort(key=lambda H: (H.n, H.m, canonical_form(H)))
    return out
