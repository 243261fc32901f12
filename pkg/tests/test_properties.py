import pytest

from harary_lab.graphs import MultiGraph, canonical_form, contains, enumerate_nonisomorphic, is_isomorphic, parse_named, to_graph6
from harary_lab.properties import builtin, classify, minimal_forbidden, parse_property, standard_catalog


def g(name):
    return parse_named(name)


def test_builtin_predicates():
    assert builtin("edgeless").holds(g("E3")) and not builtin("edgeless").holds(g("K2"))
    assert builtin("complete").holds(g("K4")) and not builtin("complete").holds(g("P3"))
    assert builtin("connected").holds(g("P4")) and not builtin("connected").holds(g("E2"))
    mcc2 = builtin("mcc", 2)
    assert mcc2.holds(g("M3")) and not mcc2.holds(g("P3"))
    assert builtin("induced-free", "P3").holds(g("K3")) and not builtin("induced-free", "P3").holds(g("P3"))
    assert not builtin("subgraph-free", "P3").holds(g("K3"))
    du = builtin("du", "K2")
    assert du.holds(g("M3")) and not du.holds(g("K1uK2"))
    assert builtin("du", "K1").holds(g("E4"))


def test_null_graph_is_excluded():
    for P in standard_catalog():
        assert not P.holds(MultiGraph(0))


def test_du_requires_connected_template():
    with pytest.raises(ValueError):
        builtin("du", "E2")


def test_parse_property_aliases():
    assert parse_property("adjoint").name == "complete"
    assert parse_property("convex").name == "connected"
    assert parse_property("fr:K3").name == parse_property("induced-free:K3").name == "induced-free:" + to_graph6(g("K3"))
    assert parse_property("mcc:3").holds(g("P3"))
    for bad in ("mcc:x", "nonsense", "du:E2"):
        with pytest.raises(ValueError):
            parse_property(bad)


def test_catalog_size_and_claims_hold():
    cat = standard_catalog()
    assert len(cat) == 13
    for P in cat:
        report = classify(P, 5)
        for claim in P.claims:
            assert report.flags[claim], (P.name, claim, report.counterexamples[claim])


def test_classify_examples():
    r = classify(builtin("induced-free", "P3"), 5)
    assert r.flags["hereditary"] and r.flags["additive"]
    assert not r.flags["monotone"]
    G, op, H = r.counterexamples["monotone"]
    assert is_isomorphic(G, g("K3")) and is_isomorphic(H, g("P3"))
    r = classify(builtin("connected"), 4)
    assert not r.flags["additive"] and not r.flags["hereditary"] and not r.flags["monotone"]
    r = classify(builtin("mcc", 2), 5)
    assert all(r.flags.values())
    d = r.as_dict()
    assert set(d) == {"property", "n_max", "flags", "counterexamples"}


def test_classify_matches_brute_closure():
    """Hereditary flag agrees with a direct check over all induced subgraphs."""
    corpus = [G for G in enumerate_nonisomorphic(5) if G.n]
    for P in standard_catalog():
        members = [G for G in corpus if P.holds(G)]
        brute = all(
            P.holds(G.induced_mask(S)) for G in members for S in range(1, 1 << G.n)
        )
        assert classify(P, 5).flags["hereditary"] == brute, P.name


def test_minimal_forbidden():
    names = lambda gs: sorted(canonical_form(G) for G in gs)  # noqa: E731
    assert names(minimal_forbidden(builtin("edgeless"), "induced", 4)) == names([g("K2")])
    assert names(minimal_forbidden(builtin("mcc", 2), "induced", 4)) == names([g("P3"), g("K3")])
    assert names(minimal_forbidden(builtin("induced-free", "K1uK2"), "induced", 4)) == names([g("K1uK2")])
    assert names(minimal_forbidden(builtin("subgraph-free", "P3"), "subgraph", 4)) == names([g("P3")])
    for H in minimal_forbidden(builtin("complete"), "induced", 4):
        assert contains(H, g("E2"), "induced")
